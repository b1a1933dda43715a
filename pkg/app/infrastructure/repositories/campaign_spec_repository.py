"""
Campaign spec files: one ``key = value`` (or ``key: value``) pair per line.
"""

from pathlib import Path

from pydantic import ValidationError as PydanticValidationError

from ...application.dto import CampaignSpec
from ...application.exceptions import CampaignSpecError


def parse_campaign_spec(text: str, source: str = "<spec>") -> CampaignSpec:
    values: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        separator = "=" if "=" in line else ":"
        key, found, value = line.partition(separator)
        if not found or not key.strip():
            raise CampaignSpecError(source, f"line {number}: expected 'key = value'")
        key = key.strip().replace("-", "_")
        if key in values:
            raise CampaignSpecError(source, f"line {number}: duplicate key {key!r}")
        values[key] = value.strip()
    try:
        return CampaignSpec.model_validate(values)
    except PydanticValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in error['loc']) or 'spec'}: {error['msg']}" for error in e.errors()
        )
        raise CampaignSpecError(source, problems) from e


class CampaignSpecFileRepository:
    """Reads campaign specs from the local filesystem."""

    def load(self, location: str) -> CampaignSpec:
        try:
            text = Path(location).read_text(encoding="utf-8")
        except OSError as e:
            raise CampaignSpecError(location, f"cannot read file: {e.strerror or e}") from e
        except UnicodeDecodeError as e:
            raise CampaignSpecError(location, f"not UTF-8 text at offset {e.start}") from e
        return parse_campaign_spec(text, location)
