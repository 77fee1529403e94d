import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Iterable, Optional

from pydantic import BaseModel


logger = logging.getLogger(__name__)


def _atomic_write(text: str, out: Path) -> None:
    out.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{out.name}.", dir=out.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as file:
            file.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("wrote %s", out)


def emit(text: str, out: Optional[str]) -> None:
    """Write to `out` atomically, or to stdout when no path is given."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    _atomic_write(text, Path(out))


def write_document(doc: BaseModel, out: Optional[str]) -> None:
    emit(doc.model_dump_json(indent=2), out)


def write_lines(records: Iterable[BaseModel], out: Optional[str]) -> None:
    emit("\n".join(record.model_dump_json() for record in records), out)
