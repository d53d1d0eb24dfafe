import argparse
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from censtab import __description__, __version__
from censtab.config import Limits

COMMANDS = (
    "hom-stat",
    "check-stability",
    "check-dstep",
    "prd",
    "check-relations",
    "check-conditions",
    "reduce-idempotent",
    "snf",
)


class RunConfig(BaseModel):
    """Validated command-line request."""

    command: str
    module: Optional[str] = None
    category: Optional[str] = None
    params: Dict[str, str] = Field(default_factory=dict)
    matrix: Optional[str] = None
    rings: List[str] = Field(default_factory=list)
    d: int = 2
    N: Optional[int] = None
    N_max: Optional[int] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    m: Optional[int] = None
    m_max: Optional[int] = None
    max_gap: Optional[int] = None
    cross_check: bool = False
    output: str = "human"
    timings: bool = False
    metrics_file: Optional[str] = None
    limits: Limits = Field(default_factory=Limits)

    @field_validator("N", "N_max", "n", "n_max", "m", "m_max", "max_gap")
    def validate_bound(cls, v):
        if v is not None and v < 0:
            raise ValueError("bounds must be non-negative")
        return v

    @field_validator("d")
    def validate_d(cls, v):
        if v < 1:
            raise ValueError("d must be at least 1")
        return v

    @field_validator("output")
    def validate_output(cls, v):
        if v not in ("human", "json"):
            raise ValueError("output format must be 'human' or 'json'")
        return v

    @model_validator(mode="after")
    def validate_inputs(self):
        needs_module = {"check-stability", "check-dstep", "prd", "reduce-idempotent"}
        needs_category = {"hom-stat", "check-relations", "check-conditions"}
        if self.command in needs_module and not self.module:
            raise ValueError(f"{self.command} needs --module")
        if self.command in needs_category and not self.category:
            raise ValueError(f"{self.command} needs --category")
        if self.command == "snf" and self.matrix is None:
            raise ValueError("snf needs --matrix")
        return self


def _key_value(text: str) -> tuple:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected key=value, got '{text}'")
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", dest="output", action="store_const", const="json", default="human",
                        help="emit the JSON report instead of a table")
    parser.add_argument("--timings", action="store_true", help="include wall time in the report")
    parser.add_argument("--hom-cap", type=int, default=Limits().hom_cap, help="largest hom-set to enumerate")
    parser.add_argument("--ambient-cap", type=int, default=Limits().ambient_cap,
                        help="largest ambient rank of any module built")
    parser.add_argument("--metrics-file", help="write Prometheus metrics here after the run")
    parser.add_argument("--log-level", help="override the configured log level")


def _category(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--category", required=True,
                        help="family id (fi, fi_a, oi_a, fs_op, vi, plactic, monoid, counterexample) or a JSON file")
    parser.add_argument("--param", dest="params", type=_key_value, action="append", default=[],
                        help="family parameter key=value, e.g. a=2, q=2, alphabet=12")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="censtab", description=__description__, allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    hom_stat = sub.add_parser("hom-stat", help="hom-set sizes", allow_abbrev=False)
    _category(hom_stat)
    hom_stat.add_argument("--n-max", dest="n_max", type=int, default=5)

    stability = sub.add_parser("check-stability", help="central stability at e_{0,N}", allow_abbrev=False)
    stability.add_argument("--module", required=True)
    stability.add_argument("--N", dest="N", type=int, required=True)
    stability.add_argument("--n-max", dest="n_max", type=int)
    stability.add_argument("--cross-check", action="store_true",
                           help="also compare the tensor and colimit constructions")

    dstep = sub.add_parser("check-dstep", help="d-step central stability", allow_abbrev=False)
    dstep.add_argument("--module", required=True)
    dstep.add_argument("--d", type=int, default=2)
    dstep.add_argument("--N", dest="N", type=int, required=True)
    dstep.add_argument("--n-max", dest="n_max", type=int)
    dstep.add_argument("--cross-check", action="store_true")

    prd = sub.add_parser("prd", help="empirical presentation degree", allow_abbrev=False)
    prd.add_argument("--module", required=True)
    prd.add_argument("--N-max", dest="N_max", type=int)
    prd.add_argument("--n-max", dest="n_max", type=int)
    prd.add_argument("--cross-check", action="store_true")

    relations = sub.add_parser("check-relations", help="degree-d generation of the ideal of relations",
                               allow_abbrev=False)
    _category(relations)
    relations.add_argument("--d", type=int, default=2)
    relations.add_argument("--m-max", dest="m_max", type=int, default=1)
    relations.add_argument("--n-max", dest="n_max", type=int, default=4)
    relations.add_argument("--max-gap", dest="max_gap", type=int, help="largest n - m tested")
    relations.add_argument("--ring", dest="rings", action="append", default=[],
                           help="Z, F2, F3, ...; repeatable")

    conditions = sub.add_parser("check-conditions", help="factorization conditions (i) and (ii)",
                                allow_abbrev=False)
    _category(conditions)
    conditions.add_argument("--d", type=int, default=2)
    conditions.add_argument("--m-max", dest="m_max", type=int)
    conditions.add_argument("--n-max", dest="n_max", type=int, required=True)

    reduce = sub.add_parser("reduce-idempotent", help="reducing-idempotent isomorphisms", allow_abbrev=False)
    reduce.add_argument("--module", required=True)
    reduce.add_argument("--d", type=int, default=2)
    reduce.add_argument("--N", dest="N", type=int, required=True)
    reduce.add_argument("--n", dest="n", type=int, required=True)
    reduce.add_argument("--m", dest="m", type=int, help="single m; the whole chain 0..N-d when omitted")
    reduce.add_argument("--cross-check", action="store_true")

    snf = sub.add_parser("snf", help="Smith normal form of an integer matrix", allow_abbrev=False)
    snf.add_argument("--matrix", required=True, help='JSON rows, e.g. "[[2,4],[6,8]]"')

    for child in (hom_stat, stability, dstep, prd, relations, conditions, reduce, snf):
        _common(child)
    return parser


def to_run_config(namespace: argparse.Namespace) -> RunConfig:
    values = vars(namespace).copy()
    values["params"] = dict(values.get("params") or [])
    values["limits"] = {"hom_cap": values.pop("hom_cap"), "ambient_cap": values.pop("ambient_cap")}
    values.pop("log_level", None)
    return RunConfig(**{k: v for k, v in values.items() if v is not None or k in ("limits",)})
