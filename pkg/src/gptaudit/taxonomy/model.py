"""The data taxonomy that classification targets.

A taxonomy is an ordered list of categories, each holding an ordered list
of named data types.  The bundled default ships 24 categories and 145
distinct data types.  ``Other`` is not a taxon: it is a distinguished
sentinel used by :class:`TaxonomyLabel` when nothing matches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import yaml

from gptaudit.errors import ValidationError

OTHER = "Other"


@dataclass(frozen=True, slots=True)
class DataType:
    name: str
    description: str
    synthetic: bool = False  # description written in-house, pending upstream reconciliation


@dataclass(frozen=True, slots=True)
class Category:
    name: str
    description: str
    data_types: tuple[DataType, ...]


@dataclass(frozen=True)
class Taxonomy:
    version: str
    categories: tuple[Category, ...]
    _index: dict[tuple[str, str], DataType] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        for cat in self.categories:
            for dt in cat.data_types:
                self._index[(cat.name, dt.name)] = dt

    @property
    def category_count(self) -> int:
        return len(self.categories)

    @property
    def data_type_count(self) -> int:
        """Count of distinct data-type names (a name may recur across categories)."""
        return len({dt.name for cat in self.categories for dt in cat.data_types})

    def lookup(self, category: str, data_type: str) -> DataType | None:
        """Exact, case-sensitive lookup after trimming surrounding whitespace."""
        return self._index.get((category.strip(), data_type.strip()))

    def category_names(self) -> list[str]:
        return [cat.name for cat in self.categories]


@dataclass(frozen=True, slots=True)
class TaxonomyLabel:
    """A (category, data type) assignment, or the Other sentinel."""

    category: str
    data_type: str

    def __post_init__(self) -> None:
        if self.category == OTHER and self.data_type != OTHER:
            raise ValidationError("label: category Other requires data_type Other")

    @property
    def is_other(self) -> bool:
        return self.category == OTHER

    def as_tuple(self) -> tuple[str, str]:
        return (self.category, self.data_type)


OTHER_LABEL = TaxonomyLabel(OTHER, OTHER)


def make_label(taxonomy: Taxonomy, category: str, data_type: str) -> TaxonomyLabel:
    """Build a label that is either Other or resolves in ``taxonomy``."""
    category = category.strip()
    data_type = data_type.strip()
    if category.lower() == OTHER.lower():
        return OTHER_LABEL
    if data_type.lower() == OTHER.lower():
        # A category with no matching type degrades to the full sentinel.
        return OTHER_LABEL
    if taxonomy.lookup(category, data_type) is None:
        raise ValidationError(f"label: ({category!r}, {data_type!r}) not in taxonomy")
    return TaxonomyLabel(category, data_type)


def bundled_taxonomy_path() -> Path:
    return Path(str(resources.files("gptaudit.taxonomy").joinpath("data/default_taxonomy.yaml")))


def load_taxonomy(path: str | Path | None = None) -> Taxonomy:
    """Load and eagerly validate a taxonomy file.

    Raises ValidationError naming the first violated invariant and where
    it occurred.
    """
    path = Path(path) if path is not None else bundled_taxonomy_path()
    try:
        doc = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ValidationError(f"{path}: not valid YAML: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top level must be a mapping")

    version = doc.get("version")
    if not isinstance(version, str) or not version.strip():
        raise ValidationError(f"{path}: header 'version' missing or empty")

    raw_categories = doc.get("categories")
    if not isinstance(raw_categories, list) or not raw_categories:
        raise ValidationError(f"{path}: 'categories' must be a non-empty list")

    categories: list[Category] = []
    seen_categories: set[str] = set()
    for ci, raw_cat in enumerate(raw_categories):
        where = f"{path}: categories[{ci}]"
        if not isinstance(raw_cat, dict):
            raise ValidationError(f"{where}: category must be a mapping")
        name = _req_str(raw_cat, "name", where)
        description = _req_str(raw_cat, "description", where)
        if name in seen_categories:
            raise ValidationError(f"{where}: duplicate category name {name!r}")
        seen_categories.add(name)

        raw_types = raw_cat.get("data_types")
        if not isinstance(raw_types, list) or not raw_types:
            raise ValidationError(f"{where} ({name}): needs at least one data type")
        types: list[DataType] = []
        seen_types: set[str] = set()
        for ti, raw_dt in enumerate(raw_types):
            twhere = f"{where} ({name}): data_types[{ti}]"
            if not isinstance(raw_dt, dict):
                raise ValidationError(f"{twhere}: data type must be a mapping")
            unknown = set(raw_dt) - {"name", "description", "synthetic"}
            if unknown:
                raise ValidationError(f"{twhere}: unknown keys {sorted(unknown)}")
            tname = _req_str(raw_dt, "name", twhere)
            tdesc = _req_str(raw_dt, "description", twhere)
            if tname in seen_types:
                raise ValidationError(f"{twhere}: duplicate data type {tname!r} in category")
            seen_types.add(tname)
            types.append(DataType(tname, tdesc, bool(raw_dt.get("synthetic", False))))
        categories.append(Category(name, description, tuple(types)))

    taxonomy = Taxonomy(version=version, categories=tuple(categories))

    # The header's declared counts are cross-checked against the contents.
    declared_cats = doc.get("category_count")
    if declared_cats is not None and declared_cats != taxonomy.category_count:
        raise ValidationError(
            f"{path}: header category_count={declared_cats} but file has {taxonomy.category_count}"
        )
    declared_types = doc.get("data_type_count")
    if declared_types is not None and declared_types != taxonomy.data_type_count:
        raise ValidationError(
            f"{path}: header data_type_count={declared_types} "
            f"but file has {taxonomy.data_type_count} distinct names"
        )
    return taxonomy


def serialize_taxonomy(taxonomy: Taxonomy) -> str:
    """Canonical serialization; load(serialize(load(f))) is a fixpoint."""
    doc = {
        "version": taxonomy.version,
        "category_count": taxonomy.category_count,
        "data_type_count": taxonomy.data_type_count,
        "categories": [
            {
                "name": cat.name,
                "description": cat.description,
                "data_types": [
                    {"name": dt.name, "description": dt.description}
                    | ({"synthetic": True} if dt.synthetic else {})
                    for dt in cat.data_types
                ],
            }
            for cat in taxonomy.categories
        ],
    }
    return yaml.safe_dump(doc, sort_keys=False, allow_unicode=True, width=100)


def _req_str(mapping: dict, key: str, where: str) -> str:
    value = mapping.get(key)
    if not isinstance(value, str) or not value.strip():
        raise ValidationError(f"{where}: {key!r} missing or empty")
    return value.strip()


@lru_cache(maxsize=1)
def default_taxonomy() -> Taxonomy:
    return load_taxonomy()
