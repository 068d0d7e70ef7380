from .model import (
    OTHER,
    Category,
    DataType,
    Taxonomy,
    TaxonomyLabel,
    bundled_taxonomy_path,
    load_taxonomy,
    make_label,
    serialize_taxonomy,
)

__all__ = [
    "OTHER",
    "Category",
    "DataType",
    "Taxonomy",
    "TaxonomyLabel",
    "bundled_taxonomy_path",
    "load_taxonomy",
    "make_label",
    "serialize_taxonomy",
]
