from __future__ import annotations

from pathlib import Path

import click
from loguru import logger
from pydantic import ValidationError

from domain.errors import InvalidInputError
from infra.schemas.state_file import StateFile

STDIN = "-"


def read_state_file(source: str) -> StateFile:
    """Parse a state file from a path, or from standard input when ``source`` is "-"."""
    try:
        text = click.get_text_stream("stdin").read() if source == STDIN else Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read state file {source}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise InvalidInputError(f"malformed state file {source}: not UTF-8 text ({exc.reason})") from exc
    try:
        state_file = StateFile.model_validate_json(text)
    except ValidationError as exc:
        raise InvalidInputError(f"malformed state file {source}: {exc}") from exc
    logger.debug(f"Loaded state file from {'stdin' if source == STDIN else source}")
    return state_file
