from censtab.services.linalg_service import parse_matrix, snf_report
from censtab.services.relations_service import RelationsService
from censtab.services.stability_service import StabilityService

__all__ = ["RelationsService", "StabilityService", "parse_matrix", "snf_report"]
