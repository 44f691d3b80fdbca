"""Regenerate tests/fixtures.ts from the live service.

Run from the repository root (the featureline package must be installed):

    python3 frontend/scripts/capture_fixtures.py
"""

import json
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from featureline.service import create_app

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "tests"))
from conftest import CAR_DOC  # noqa: E402

CONFLICT_DOC = '''model "Conflict"
feature Top {
  feature Head mandatory group=or {
    feature A
    feature B
  }
  feature C
}
excludes A C
excludes B C
'''


def capture() -> dict:
    client = TestClient(create_app())
    fixtures = {}

    mid = client.post("/models", content=CAR_DOC).json()["model_id"]
    fixtures["uploadResponse"] = client.post("/models", content=CAR_DOC).json()

    sid = client.post(f"/models/{mid}/sessions").json()["session_id"]
    fixtures["initialSession"] = client.get(f"/sessions/{sid}").json()
    fixtures["initialAssets"] = client.get(f"/sessions/{sid}/assets").json()

    fixtures["dieselDecision"] = client.post(
        f"/sessions/{sid}/decisions",
        json={"label": "Diesel", "action": "select"}).json()
    fixtures["sessionAfterDiesel"] = client.get(f"/sessions/{sid}").json()
    fixtures["assetsAfterDiesel"] = client.get(f"/sessions/{sid}/assets").json()

    for label, action in [("ACC", "discard"), ("Radar", "discard"),
                          ("Camera", "discard"), ("Sunroof", "discard")]:
        response = client.post(f"/sessions/{sid}/decisions",
                               json={"label": label, "action": action})
        assert response.status_code == 200, (label, response.text)
    # sweep up whatever is still open (free constraint-gadget heads)
    view = client.get(f"/sessions/{sid}").json()
    while not view["complete"]:
        target = next(b for b in view["boxes"] if b["state"] == "open")
        for action in ("discard", "select"):
            response = client.post(f"/sessions/{sid}/decisions",
                                   json={"label": target["label"],
                                         "action": action})
            if response.status_code == 200:
                break
        else:
            raise AssertionError(f"cannot decide {target['label']}")
        view = client.get(f"/sessions/{sid}").json()
    fixtures["completeSession"] = view
    fixtures["completeAssets"] = client.get(f"/sessions/{sid}/assets").json()
    fixtures["exportBody"] = client.get(f"/sessions/{sid}/export").text

    cmid = client.post("/models", content=CONFLICT_DOC).json()["model_id"]
    csid = client.post(f"/models/{cmid}/sessions").json()["session_id"]
    fixtures["conflictSession"] = client.get(f"/sessions/{csid}").json()
    rejected = client.post(f"/sessions/{csid}/decisions",
                           json={"label": "C", "action": "select"})
    assert rejected.status_code == 409, rejected.text
    fixtures["rejectedDecision"] = rejected.json()
    return fixtures


def main() -> None:
    fixtures = capture()
    out = "// Captured from the live configuration service; do not edit by hand.\n"
    out += "// Regenerate with: python3 frontend/scripts/capture_fixtures.py\n\n"
    for name, value in fixtures.items():
        out += f"export const {name} = " \
               f"{json.dumps(value, indent=2, sort_keys=True)} as const;\n\n"
    target = Path(__file__).resolve().parents[1] / "tests" / "fixtures.ts"
    target.write_text(out, encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
