"""UTF-8 JSON input documents, validated into pydantic models."""

import json
from pathlib import Path
from typing import Type, TypeVar

from pydantic import BaseModel, ValidationError

from gftlab.exceptions import DocumentError

M = TypeVar("M", bound=BaseModel)


def load_document(path: str, model: Type[M]) -> M:
    """
    Read ``path`` and validate it as ``model``.

    Raises
    ------
    DocumentError
        If the file cannot be read, is not JSON, or fails validation.
    """
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"Cannot read '{path}': {exc.strerror}.") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"'{path}' is not valid JSON: {exc.msg} (line {exc.lineno}).") from exc
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "document"
        raise DocumentError(f"'{path}': {where}: {first['msg']}.") from exc
