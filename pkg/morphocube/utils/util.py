import hashlib
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from io import BytesIO
from os import PathLike
from pathlib import Path
from typing import Callable, List, Sequence, Tuple, TypeVar, Union
from urllib.parse import unquote, urlparse

import fsspec

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

PathOrUrl = Union[str, Path, PathLike]


def name_from_path(path: PathOrUrl) -> str:
    if not isinstance(path, Path):
        path = Path(str(path))

    parsed = urlparse(path.name)

    return unquote(parsed.path)


def read_bytes_from_path(path: PathOrUrl, **kwargs) -> bytes:
    with fsspec.open(urlpath=str(path), mode="rb", **kwargs) as f:
        return f.read()


def write_bytes_to_path(path: PathOrUrl, value: bytes, **kwargs) -> None:
    """
    Writes bytes to any fsspec path, creating the parent directory when it is missing
    """
    fs, fs_path = fsspec.url_to_fs(str(path), **kwargs)

    parent_dir = os.path.dirname(fs_path)

    if parent_dir and not fs.exists(parent_dir):
        fs.mkdirs(parent_dir, exist_ok=True)

    with fs.open(fs_path, "wb") as f:
        f.write(value)


def path_exists(path: PathOrUrl, **kwargs) -> bool:
    fs, fs_path = fsspec.url_to_fs(str(path), **kwargs)

    return fs.exists(fs_path)


def hash_from_bytes(byte_data: bytes, hash_func=hashlib.md5, threshold=1024 * 1024 * 128) -> str:
    """
    Gets a hash from bytes. If the bytes are larger than the threshold, the hash is computed in chunks
    to avoid memory issues.
    """
    if len(byte_data) < 1024 * 1024 * 10:  # 10MB
        return hash_func(byte_data).hexdigest()

    hash = hash_func()

    if len(byte_data) > threshold:
        stream = BytesIO(byte_data)
        b = bytearray(128 * 1024)
        mv = memoryview(b)

        while n := stream.readinto(mv):
            hash.update(mv[:n])
    else:
        hash.update(byte_data)

    return hash.hexdigest()


def chunk_range(total: int, num_chunks: int) -> List[Tuple[int, int]]:
    """
    Splits ``range(total)`` into at most ``num_chunks`` contiguous, half-open spans,
    distributing the remainder evenly over the leading spans.

    Args:
        total (int): The number of items to split.
        num_chunks (int): The desired number of spans.

    Returns:
        List[Tuple[int, int]]: ``(start, stop)`` pairs in ascending order.
    """
    if total <= 0:
        return []

    num_chunks = max(1, min(num_chunks, total))

    ideal_chunk_size = total // num_chunks
    remainder = total % num_chunks

    spans = []
    start = 0
    for i in range(num_chunks):
        end = start + ideal_chunk_size + (1 if i < remainder else 0)
        spans.append((start, end))
        start = end

    return spans


def ordered_map(func: Callable[[T], R], items: Sequence[T], *, workers: int = 1) -> List[R]:
    """
    Maps ``func`` over ``items`` with a thread pool and returns the results in input order.

    Exceptions are re-raised from the first failing item, in input order.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")

    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]

    thread_count = min(workers, len(items))

    with ThreadPoolExecutor(max_workers=thread_count) as executor:
        futures = [executor.submit(func, item) for item in items]

    return [future.result() for future in futures]
