"""Graph generation, embedding and file formats."""

from .builder import EmbeddingBuilder, face_with_classes
from .embed import NonPlanar, TooLarge, embed, is_planar
from .formats import (
    FormatError,
    MalformedHeader,
    SchemaViolation,
    TruncatedBits,
    embedding_from_dict,
    embedding_to_dict,
    parse_graph6,
    parse_json_embedding,
    write_dot,
    write_graph6,
    write_json_embedding,
)
from .named import (
    UnknownName,
    cycle,
    dodecahedron,
    gen_named,
    grid,
    path,
    petersen_edges,
    star,
    subdivided,
)
from .random_planar import gen_random

__all__ = [
    "EmbeddingBuilder",
    "FormatError",
    "MalformedHeader",
    "NonPlanar",
    "SchemaViolation",
    "TooLarge",
    "TruncatedBits",
    "UnknownName",
    "cycle",
    "dodecahedron",
    "embed",
    "embedding_from_dict",
    "embedding_to_dict",
    "face_with_classes",
    "gen_named",
    "gen_random",
    "grid",
    "is_planar",
    "parse_graph6",
    "parse_json_embedding",
    "path",
    "petersen_edges",
    "star",
    "subdivided",
    "write_dot",
    "write_graph6",
    "write_json_embedding",
]
