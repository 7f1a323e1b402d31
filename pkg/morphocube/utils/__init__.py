from .util import (
    chunk_range,
    hash_from_bytes,
    name_from_path,
    ordered_map,
    path_exists,
    read_bytes_from_path,
    write_bytes_to_path,
)

__all__ = [
    "chunk_range",
    "hash_from_bytes",
    "name_from_path",
    "ordered_map",
    "path_exists",
    "read_bytes_from_path",
    "write_bytes_to_path",
]
