// Captured from the live configuration service; do not edit by hand.
// Regenerate with: python3 frontend/scripts/capture_fixtures.py

export const uploadResponse = {
  "assets": 6,
  "boxes": 22,
  "cycles": [],
  "model_id": "m2",
  "name": "Car",
  "violations": []
} as const;

export const initialSession = {
  "boxes": [
    {
      "group": "free",
      "id": "b1",
      "label": "Car",
      "mandatory": true,
      "moves": [],
      "parent": null,
      "reason": {
        "rule": "root",
        "source": null
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "xor",
      "id": "b2",
      "label": "Engine",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Car"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b3",
      "label": "Diesel",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b2",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b4",
      "label": "Gasoline",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b2",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b5",
      "label": "Hybrid",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b2",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b6",
      "label": "Electric",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b2",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b7",
      "label": "ACC",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b8",
      "label": "Radar",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b9",
      "label": "Camera",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b10",
      "label": "Sunroof",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b11",
      "label": "RoofRack",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b12",
      "label": "constraints",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Car"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "mutex",
      "id": "b13",
      "label": "_c1",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b12",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b14",
      "label": "Sunroof",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b13",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b15",
      "label": "RoofRack",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b13",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "xor",
      "id": "b16",
      "label": "_c2",
      "mandatory": true,
      "moves": [],
      "parent": "b12",
      "reason": {
        "rule": "mandatory",
        "source": "constraints"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b17",
      "label": "ACC",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b16",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b18",
      "label": "_c3",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b16",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "or",
      "id": "b19",
      "label": "_c4",
      "mandatory": true,
      "moves": [],
      "parent": "b12",
      "reason": {
        "rule": "mandatory",
        "source": "constraints"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b20",
      "label": "_c3",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b19",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b21",
      "label": "Radar",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b19",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b22",
      "label": "Camera",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b19",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    }
  ],
  "complete": false,
  "dead_end": false,
  "journal_length": 0,
  "model_id": "m1",
  "open": 17,
  "session_id": "132332913ed5"
} as const;

export const initialAssets = {
  "assets": [
    {
      "id": "base-frame",
      "kind": "part",
      "name": "Base frame",
      "status": "included"
    },
    {
      "id": "radar-unit",
      "kind": "part",
      "name": "Radar unit",
      "status": "undecided"
    },
    {
      "id": "acc-ecu",
      "kind": "software",
      "name": "Cruise control unit",
      "status": "undecided"
    },
    {
      "id": "diesel-tank",
      "kind": "part",
      "name": "Diesel tank",
      "status": "undecided"
    },
    {
      "id": "sunroof-kit",
      "kind": "part",
      "name": "Sunroof kit",
      "status": "undecided"
    },
    {
      "id": "charge-port",
      "kind": "part",
      "name": "Charging port",
      "status": "undecided"
    }
  ],
  "excluded": [],
  "included": [
    "base-frame"
  ],
  "undecided": [
    "radar-unit",
    "acc-ecu",
    "diesel-tank",
    "sunroof-kit",
    "charge-port"
  ]
} as const;

export const dieselDecision = {
  "accepted": true,
  "complete": false,
  "forced": [
    {
      "action": "discard",
      "box": "b4",
      "label": "Gasoline",
      "rule": "mutex",
      "source": "Diesel"
    },
    {
      "action": "discard",
      "box": "b5",
      "label": "Hybrid",
      "rule": "mutex",
      "source": "Diesel"
    },
    {
      "action": "discard",
      "box": "b6",
      "label": "Electric",
      "rule": "mutex",
      "source": "Diesel"
    }
  ],
  "open": 13
} as const;

export const sessionAfterDiesel = {
  "boxes": [
    {
      "group": "free",
      "id": "b1",
      "label": "Car",
      "mandatory": true,
      "moves": [],
      "parent": null,
      "reason": {
        "rule": "root",
        "source": null
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "xor",
      "id": "b2",
      "label": "Engine",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Car"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b3",
      "label": "Diesel",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "state": "selected",
      "state_color": "green",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b4",
      "label": "Gasoline",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "reason": {
        "rule": "mutex",
        "source": "Diesel"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b5",
      "label": "Hybrid",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "reason": {
        "rule": "mutex",
        "source": "Diesel"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b6",
      "label": "Electric",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "reason": {
        "rule": "mutex",
        "source": "Diesel"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b7",
      "label": "ACC",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b8",
      "label": "Radar",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b9",
      "label": "Camera",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b10",
      "label": "Sunroof",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b11",
      "label": "RoofRack",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b12",
      "label": "constraints",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Car"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "mutex",
      "id": "b13",
      "label": "_c1",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b12",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b14",
      "label": "Sunroof",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b13",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b15",
      "label": "RoofRack",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b13",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "xor",
      "id": "b16",
      "label": "_c2",
      "mandatory": true,
      "moves": [],
      "parent": "b12",
      "reason": {
        "rule": "mandatory",
        "source": "constraints"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b17",
      "label": "ACC",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b16",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b18",
      "label": "_c3",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b16",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "or",
      "id": "b19",
      "label": "_c4",
      "mandatory": true,
      "moves": [],
      "parent": "b12",
      "reason": {
        "rule": "mandatory",
        "source": "constraints"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b20",
      "label": "_c3",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b19",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b21",
      "label": "Radar",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b19",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b22",
      "label": "Camera",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b19",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    }
  ],
  "complete": false,
  "dead_end": false,
  "journal_length": 1,
  "model_id": "m1",
  "open": 13,
  "session_id": "132332913ed5"
} as const;

export const assetsAfterDiesel = {
  "assets": [
    {
      "id": "base-frame",
      "kind": "part",
      "name": "Base frame",
      "status": "included"
    },
    {
      "id": "radar-unit",
      "kind": "part",
      "name": "Radar unit",
      "status": "undecided"
    },
    {
      "id": "acc-ecu",
      "kind": "software",
      "name": "Cruise control unit",
      "status": "undecided"
    },
    {
      "id": "diesel-tank",
      "kind": "part",
      "name": "Diesel tank",
      "status": "included"
    },
    {
      "id": "sunroof-kit",
      "kind": "part",
      "name": "Sunroof kit",
      "status": "undecided"
    },
    {
      "id": "charge-port",
      "kind": "part",
      "name": "Charging port",
      "status": "excluded"
    }
  ],
  "excluded": [
    "charge-port"
  ],
  "included": [
    "base-frame",
    "diesel-tank"
  ],
  "undecided": [
    "radar-unit",
    "acc-ecu",
    "sunroof-kit"
  ]
} as const;

export const completeSession = {
  "boxes": [
    {
      "group": "free",
      "id": "b1",
      "label": "Car",
      "mandatory": true,
      "moves": [],
      "parent": null,
      "reason": {
        "rule": "root",
        "source": null
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "xor",
      "id": "b2",
      "label": "Engine",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Car"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b3",
      "label": "Diesel",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "state": "selected",
      "state_color": "green",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b4",
      "label": "Gasoline",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "reason": {
        "rule": "mutex",
        "source": "Diesel"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b5",
      "label": "Hybrid",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "reason": {
        "rule": "mutex",
        "source": "Diesel"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b6",
      "label": "Electric",
      "mandatory": false,
      "moves": [],
      "parent": "b2",
      "reason": {
        "rule": "mutex",
        "source": "Diesel"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b7",
      "label": "ACC",
      "mandatory": false,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "label-link",
        "source": "ACC"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b8",
      "label": "Radar",
      "mandatory": false,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "label-link",
        "source": "Radar"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b9",
      "label": "Camera",
      "mandatory": false,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "label-link",
        "source": "Camera"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b10",
      "label": "Sunroof",
      "mandatory": false,
      "moves": [],
      "parent": "b1",
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b11",
      "label": "RoofRack",
      "mandatory": false,
      "moves": [],
      "parent": "b1",
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b12",
      "label": "constraints",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Car"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "mutex",
      "id": "b13",
      "label": "_c1",
      "mandatory": false,
      "moves": [],
      "parent": "b12",
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b14",
      "label": "Sunroof",
      "mandatory": false,
      "moves": [],
      "parent": "b13",
      "reason": {
        "rule": "label-link",
        "source": "Sunroof"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b15",
      "label": "RoofRack",
      "mandatory": false,
      "moves": [],
      "parent": "b13",
      "reason": {
        "rule": "label-link",
        "source": "RoofRack"
      },
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "xor",
      "id": "b16",
      "label": "_c2",
      "mandatory": true,
      "moves": [],
      "parent": "b12",
      "reason": {
        "rule": "mandatory",
        "source": "constraints"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b17",
      "label": "ACC",
      "mandatory": false,
      "moves": [],
      "parent": "b16",
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b18",
      "label": "_c3",
      "mandatory": false,
      "moves": [],
      "parent": "b16",
      "reason": {
        "rule": "group-unit",
        "source": "_c2"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "red"
    },
    {
      "group": "or",
      "id": "b19",
      "label": "_c4",
      "mandatory": true,
      "moves": [],
      "parent": "b12",
      "reason": {
        "rule": "mandatory",
        "source": "constraints"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b20",
      "label": "_c3",
      "mandatory": false,
      "moves": [],
      "parent": "b19",
      "reason": {
        "rule": "label-link",
        "source": "_c3"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b21",
      "label": "Radar",
      "mandatory": false,
      "moves": [],
      "parent": "b19",
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b22",
      "label": "Camera",
      "mandatory": false,
      "moves": [],
      "parent": "b19",
      "state": "discarded",
      "state_color": "gray",
      "structural_color": "white"
    }
  ],
  "complete": true,
  "dead_end": false,
  "journal_length": 7,
  "model_id": "m1",
  "open": 0,
  "session_id": "132332913ed5"
} as const;

export const completeAssets = {
  "assets": [
    {
      "id": "base-frame",
      "kind": "part",
      "name": "Base frame",
      "status": "included"
    },
    {
      "id": "radar-unit",
      "kind": "part",
      "name": "Radar unit",
      "status": "excluded"
    },
    {
      "id": "acc-ecu",
      "kind": "software",
      "name": "Cruise control unit",
      "status": "excluded"
    },
    {
      "id": "diesel-tank",
      "kind": "part",
      "name": "Diesel tank",
      "status": "included"
    },
    {
      "id": "sunroof-kit",
      "kind": "part",
      "name": "Sunroof kit",
      "status": "excluded"
    },
    {
      "id": "charge-port",
      "kind": "part",
      "name": "Charging port",
      "status": "excluded"
    }
  ],
  "excluded": [
    "radar-unit",
    "acc-ecu",
    "sunroof-kit",
    "charge-port"
  ],
  "included": [
    "base-frame",
    "diesel-tank"
  ],
  "undecided": []
} as const;

export const exportBody = "{\n  \"fingerprint\": \"sha256:c564e16b5128fc69\",\n  \"format\": \"fmconfig/1\",\n  \"journal\": [\n    {\n      \"action\": \"select\",\n      \"label\": \"Diesel\"\n    },\n    {\n      \"action\": \"discard\",\n      \"label\": \"ACC\"\n    },\n    {\n      \"action\": \"discard\",\n      \"label\": \"Radar\"\n    },\n    {\n      \"action\": \"discard\",\n      \"label\": \"Camera\"\n    },\n    {\n      \"action\": \"discard\",\n      \"label\": \"Sunroof\"\n    },\n    {\n      \"action\": \"discard\",\n      \"label\": \"RoofRack\"\n    },\n    {\n      \"action\": \"discard\",\n      \"label\": \"_c1\"\n    }\n  ],\n  \"model\": \"Car\",\n  \"states\": {\n    \"ACC\": \"discarded\",\n    \"Camera\": \"discarded\",\n    \"Car\": \"selected\",\n    \"Diesel\": \"selected\",\n    \"Electric\": \"discarded\",\n    \"Engine\": \"selected\",\n    \"Gasoline\": \"discarded\",\n    \"Hybrid\": \"discarded\",\n    \"Radar\": \"discarded\",\n    \"RoofRack\": \"discarded\",\n    \"Sunroof\": \"discarded\",\n    \"_c1\": \"discarded\",\n    \"_c2\": \"selected\",\n    \"_c3\": \"selected\",\n    \"_c4\": \"selected\",\n    \"constraints\": \"selected\"\n  }\n}\n" as const;

export const conflictSession = {
  "boxes": [
    {
      "group": "free",
      "id": "b1",
      "label": "Top",
      "mandatory": true,
      "moves": [],
      "parent": null,
      "reason": {
        "rule": "root",
        "source": null
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "or",
      "id": "b2",
      "label": "Head",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Top"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "free",
      "id": "b3",
      "label": "A",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b2",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b4",
      "label": "B",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b2",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b5",
      "label": "C",
      "mandatory": false,
      "moves": [
        "discard"
      ],
      "parent": "b1",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b6",
      "label": "constraints",
      "mandatory": true,
      "moves": [],
      "parent": "b1",
      "reason": {
        "rule": "mandatory",
        "source": "Top"
      },
      "state": "selected",
      "state_color": "green",
      "structural_color": "blue"
    },
    {
      "group": "mutex",
      "id": "b7",
      "label": "_c1",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b6",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b8",
      "label": "A",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b7",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b9",
      "label": "C",
      "mandatory": false,
      "moves": [
        "discard"
      ],
      "parent": "b7",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "mutex",
      "id": "b10",
      "label": "_c2",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b6",
      "state": "open",
      "state_color": "none",
      "structural_color": "white"
    },
    {
      "group": "free",
      "id": "b11",
      "label": "B",
      "mandatory": false,
      "moves": [
        "select",
        "discard"
      ],
      "parent": "b10",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    },
    {
      "group": "free",
      "id": "b12",
      "label": "C",
      "mandatory": false,
      "moves": [
        "discard"
      ],
      "parent": "b10",
      "state": "open",
      "state_color": "none",
      "structural_color": "red"
    }
  ],
  "complete": false,
  "dead_end": false,
  "journal_length": 0,
  "model_id": "m3",
  "open": 9,
  "session_id": "5bd546e886b6"
} as const;

export const rejectedDecision = {
  "code": "rejected",
  "details": {
    "conflict": "b2",
    "conflict_label": "Head",
    "discard_chain": [
      {
        "action": "discard",
        "box": "b3",
        "label": "A",
        "rule": "label-link",
        "source": "A"
      },
      {
        "action": "discard",
        "box": "b8",
        "label": "A",
        "rule": "mutex",
        "source": "C"
      },
      {
        "action": "select",
        "box": "b9",
        "label": "C",
        "rule": "label-link",
        "source": "C"
      },
      {
        "action": "select",
        "box": "b12",
        "label": "C",
        "rule": "user",
        "source": null
      }
    ],
    "select_chain": [
      {
        "action": "select",
        "box": "b2",
        "label": "Head",
        "rule": "mandatory",
        "source": "Top"
      },
      {
        "action": "select",
        "box": "b1",
        "label": "Top",
        "rule": "root",
        "source": null
      }
    ]
  },
  "message": "decision leads to a contradiction"
} as const;

