"""
Basis Document - JSON file format for monomial bases and JSON reports.

    {"basis": [[0, 1], [1, 1]], "d": 4, "n": 1}

Rows use the entry order a_1, b_1, ..., a_n, b_n with exact integers in [0, d).
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from src.common.exceptions.exceptions import (
    AlgebraException,
    DocumentFormatError,
    DocumentWriteError,
)
from src.common.utils.logger import get_logger
from src.domain.models.algebra import AlgebraShape, ExponentVector

logger = get_logger(__name__)

PathLike = Union[str, Path]


def _require_int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentFormatError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class BasisDocument:
    """
    A shape together with an ordered monomial basis.

    Attributes:
        shape: Algebra shape (d, n)
        basis: Distinct nonzero exponent vectors
    """
    shape: AlgebraShape
    basis: Tuple[ExponentVector, ...]

    def to_dict(self) -> Dict:
        return {
            "d": self.shape.degree,
            "n": self.shape.factors,
            "basis": [list(v.entries) for v in self.basis],
        }

    @classmethod
    def from_dict(cls, data: Any) -> 'BasisDocument':
        """
        Validate and convert a parsed JSON value.

        Raises:
            DocumentFormatError: On any schema violation
        """
        if not isinstance(data, dict):
            raise DocumentFormatError("basis document must be a JSON object")
        missing = [key for key in ("d", "n", "basis") if key not in data]
        if missing:
            raise DocumentFormatError(f"basis document is missing {missing}")
        d = _require_int(data["d"], "d")
        n = _require_int(data["n"], "n")
        try:
            shape = AlgebraShape(d, n)
        except AlgebraException as e:
            raise DocumentFormatError(f"invalid shape: {e}") from e
        rows = data["basis"]
        if not isinstance(rows, list):
            raise DocumentFormatError("basis must be a list of rows")
        basis = []
        for position, row in enumerate(rows):
            if not isinstance(row, list):
                raise DocumentFormatError(f"row {position} must be a list")
            entries = [_require_int(e, f"row {position} entry") for e in row]
            try:
                v = shape.vector(entries)
            except AlgebraException as e:
                raise DocumentFormatError(f"row {position}: {e}") from e
            if v.is_zero():
                raise DocumentFormatError(f"row {position} is the zero vector (a scalar)")
            basis.append(v)
        if len(set(basis)) != len(basis):
            raise DocumentFormatError("basis contains duplicate rows")
        return cls(shape, tuple(basis))

    def dumps(self) -> str:
        return dumps_canonical(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> 'BasisDocument':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentFormatError(f"malformed JSON: {e}") from e
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: PathLike) -> 'BasisDocument':
        """
        Read a basis document.

        Raises:
            DocumentFormatError: If the file is unreadable or invalid
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise DocumentFormatError(f"cannot read {path}: {e}") from e
        document = cls.loads(text)
        logger.info(f"Loaded basis of {len(document.basis)} monomials for "
                    f"{document.shape.label} from {path}")
        return document

    def save(self, path: Optional[PathLike]) -> str:
        """Write the document (stdout when path is None); returns the text."""
        text = self.dumps()
        write_text(path, text)
        return text


def dumps_canonical(data: Any) -> str:
    """JSON with sorted keys and a trailing newline; stable under re-serialization."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_text(path: Optional[PathLike], text: str) -> None:
    """
    Write text to ``path``, or to stdout when path is None.

    Raises:
        DocumentWriteError: If the file cannot be written
    """
    if path is None:
        print(text, end="")
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot write {path}: {e}")
        raise DocumentWriteError(f"cannot write {path}: {e}") from e
    logger.info(f"Wrote {path}")


def write_json(path: Optional[PathLike], data: Any) -> None:
    write_text(path, dumps_canonical(data))
