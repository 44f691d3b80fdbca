"""The 150% asset library and its filtering down to a product's 100% list.

Each asset carries a variation criterion, a Boolean formula over feature
labels (or the distinguished ALWAYS for backbone assets present in every
product). Filtering a partial configuration uses three-valued evaluation,
so undecided features leave assets in the undecided bucket instead of
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import formula as fm
from .errors import CatalogError, StateModelMismatchError, UnknownLabelError
from .model import FeatureModel, Violation


class AssetKind(Enum):
    PART = "part"
    SOFTWARE = "software"
    MODEL = "model"
    SPEC = "spec"
    PROCEDURE = "procedure"
    TOOL = "tool"
    OTHER = "other"


class _Always:
    """Criterion of backbone assets; behaves like TRUE but stays reportable."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALWAYS"


ALWAYS = _Always()


@dataclass(frozen=True)
class Asset:
    id: str
    name: str
    kind: AssetKind
    criterion: fm.Formula | _Always

    def criterion_atoms(self) -> set[str]:
        if self.criterion is ALWAYS:
            return set()
        return fm.atoms(self.criterion)


class Catalog:
    """Immutable ordered asset collection with unique ids."""

    def __init__(self, assets):
        self.assets: tuple[Asset, ...] = tuple(assets)
        by_id: dict[str, Asset] = {}
        for asset in self.assets:
            if asset.id in by_id:
                raise CatalogError(f"duplicate asset id {asset.id!r}")
            by_id[asset.id] = asset
        self._by_id = by_id

    def __len__(self) -> int:
        return len(self.assets)

    def __iter__(self):
        return iter(self.assets)

    def get(self, asset_id: str) -> Asset:
        return self._by_id[asset_id]


@dataclass(frozen=True)
class FilterResult:
    """Some assets in, some out, the rest awaiting more decisions."""

    included: tuple[str, ...]
    excluded: tuple[str, ...]
    undecided: tuple[str, ...]

    def status_of(self, asset_id: str) -> str:
        if asset_id in self.included:
            return "included"
        if asset_id in self.excluded:
            return "excluded"
        if asset_id in self.undecided:
            return "undecided"
        raise KeyError(asset_id)


def bind_catalog(catalog: Catalog, model: FeatureModel) -> list[Violation]:
    """Report criterion atoms that name no model label."""
    labels = model.labels()
    out: list[Violation] = []
    for asset in catalog:
        for atom in sorted(asset.criterion_atoms()):
            if atom not in labels:
                out.append(Violation("unknown-label", asset.id,
                                     f"criterion references {atom!r}"))
    return out


def filter_complete(catalog: Catalog, assignment: dict[str, bool], *,
                    strict: bool = True) -> FilterResult:
    """Split the catalog for one complete product; nothing stays undecided."""
    policy = fm.UnknownPolicy.STRICT if strict else fm.UnknownPolicy.DEFAULT_FALSE
    included, excluded = [], []
    for asset in catalog:
        if asset.criterion is ALWAYS:
            included.append(asset.id)
            continue
        try:
            value = fm.evaluate(asset.criterion, assignment, policy)
        except UnknownLabelError as exc:
            raise UnknownLabelError(
                exc.label, f"criterion of asset {asset.id!r}") from None
        (included if value else excluded).append(asset.id)
    return FilterResult(included=tuple(included), excluded=tuple(excluded),
                        undecided=())


def filter_partial(catalog: Catalog, state) -> FilterResult:
    """Three-valued preview for a partial configuration.

    ``state`` is a :class:`featureline.engine.ConfigState`. Selected maps
    to TRUE, discarded to FALSE, open to UNKNOWN; assets whose criterion
    stays UNKNOWN land in the undecided bucket.
    """
    from .engine import BoxState

    if set(state.states) != set(state.model.boxes):
        raise StateModelMismatchError("state does not cover its model")
    tri = {
        BoxState.SELECTED: fm.TriValue.TRUE,
        BoxState.DISCARDED: fm.TriValue.FALSE,
        BoxState.OPEN: fm.TriValue.UNKNOWN,
    }
    partial = {label: tri[s] for label, s in state.label_states().items()}
    included, excluded, undecided = [], [], []
    for asset in catalog:
        if asset.criterion is ALWAYS:
            included.append(asset.id)
            continue
        value = fm.evaluate3(asset.criterion, partial)
        if value is fm.TriValue.TRUE:
            included.append(asset.id)
        elif value is fm.TriValue.FALSE:
            excluded.append(asset.id)
        else:
            undecided.append(asset.id)
    return FilterResult(included=tuple(included), excluded=tuple(excluded),
                        undecided=tuple(undecided))
