import json
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, ValidationError

from censtab.config import DEFAULT_LIMITS, Limits
from censtab.core.categories.base import CategorySpec
from censtab.core.exceptions import InvalidInputError
from censtab.core.linalg.ring import RingSpec
from censtab.core.modules.presentation import ModulePresentation, ensure_valid, presentation_from_indices
from censtab.core.utils.logger import get_logger
from censtab.core.utils.validators import CategoryDocument, ModuleDocument

logger = get_logger(__name__)

PathLike = Union[str, Path]


def format_validation_error(source: str, error: ValidationError) -> str:
    """One line per problem, each prefixed with its location inside the document."""
    lines = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<root>"
        lines.append(f"{source}: {location}: {item['msg']}")
    return "\n".join(lines)


def load_json(path: PathLike) -> Any:
    """Read a UTF-8 JSON document."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"{path}: cannot read file: {e.strerror or e}") from None
    except UnicodeDecodeError as e:
        raise InvalidInputError(f"{path}: not UTF-8: {e.reason}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def _validate(model: type, data: Any, source: str) -> BaseModel:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InvalidInputError(format_validation_error(source, e)) from None


def parse_category(data: Any, hom_cap: int = DEFAULT_LIMITS.hom_cap, source: str = "<category>") -> CategorySpec:
    document = _validate(CategoryDocument, data, source)
    return document.to_category(hom_cap)


def parse_module(data: Any, limits: Optional[Limits] = None, source: str = "<module>") -> ModulePresentation:
    """Validate a module document and resolve its hom indices."""
    limits = limits or DEFAULT_LIMITS
    document = _validate(ModuleDocument, data, source)
    category = document.category.to_category(limits.hom_cap)
    ring = RingSpec.parse(document.ring)
    relations = [r.model_dump() for r in document.relations]
    try:
        presentation = presentation_from_indices(
            category, ring, document.generators, relations, name=document.id or Path(source).stem
        )
        ensure_valid(presentation)
    except InvalidInputError as e:
        raise InvalidInputError(f"{source}: {e}") from None
    logger.info(
        f"loaded module '{presentation.name}' over {ring} on {category.identifier}: "
        f"{len(presentation.generators)} generators, {len(presentation.relations)} relations"
    )
    return presentation


def load_category(path: PathLike, hom_cap: int = DEFAULT_LIMITS.hom_cap) -> CategorySpec:
    return parse_category(load_json(path), hom_cap, source=str(path))


def load_module(path: PathLike, limits: Optional[Limits] = None) -> ModulePresentation:
    return parse_module(load_json(path), limits, source=str(path))
