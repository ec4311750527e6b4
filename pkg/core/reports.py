# core/reports.py
"""Full analysis of a single concept class, and its fixed-width text rendering."""
import logging
from dataclasses import dataclass, field

from .measures import (
    pattern_profile,
    recursive_teaching_plan,
    shattered_witness,
    teaching_dimensions,
    vc_dimension,
)

logger = logging.getLogger(__name__)


@dataclass
class AnalysisReport:
    n: int
    size: int
    vcd: int
    shattered: str
    concepts: list
    tds: list
    td_min: int
    td_max: int
    rtd: int
    plan: list = field(default_factory=list)
    profile: dict = field(default_factory=dict)
    maximal: bool = False
    intersection_closed: bool = False


def default_profile_max(n, vcd):
    # Pattern counts stop doubling one step past the VC dimension.
    return max(1, min(n, vcd + 1))


def analyze_class(concept_class, profile_max=None):
    from explore.corpus import is_intersection_closed, is_maximal_class

    vcd = vc_dimension(concept_class)
    tds = teaching_dimensions(concept_class)
    plan = recursive_teaching_plan(concept_class)
    profile_max = default_profile_max(concept_class.n, vcd) if profile_max is None else profile_max
    profile = pattern_profile(concept_class, profile_max)
    report = AnalysisReport(
        n=concept_class.n,
        size=len(concept_class),
        vcd=vcd,
        shattered=str(shattered_witness(concept_class)),
        concepts=concept_class.to_strings(),
        tds=tds,
        td_min=min(tds),
        td_max=max(tds),
        rtd=plan.rtd,
        plan=[
            {"td": level.td, "concepts": [concept_class.label(c) for c in level.removed]}
            for level in plan.levels
        ],
        profile=dict(profile.max_patterns),
        maximal=is_maximal_class(concept_class),
        intersection_closed=is_intersection_closed(concept_class),
    )
    logger.info(
        f"Analyzed {report.size} concepts over [{report.n}]: VCD {report.vcd}, RTD {report.rtd}"
    )
    return report


def _rows(pairs):
    width = max(len(label) for label, _ in pairs)
    return [f"{label:<{width}}  {value}" for label, value in pairs]


def render_analysis(report):
    lines = _rows([
        ("n", report.n),
        ("size", report.size),
        ("vcd", report.vcd),
        ("shattered", report.shattered),
        ("td_min", report.td_min),
        ("td_max", report.td_max),
        ("rtd", report.rtd),
        ("maximal", "yes" if report.maximal else "no"),
        ("intersection_closed", "yes" if report.intersection_closed else "no"),
    ])
    lines.append("")
    width = max(report.n, len("concept"))
    lines.append(f"{'concept':<{width}}  td")
    lines.extend(f"{c:<{width}}  {td}" for c, td in zip(report.concepts, report.tds))
    lines.append("")
    lines.append("level  td  removed")
    for index, level in enumerate(report.plan):
        lines.append(f"{index:<5}  {level['td']:<2}  {' '.join(level['concepts'])}")
    lines.append("")
    lines.append("x  max patterns")
    lines.extend(f"{x:<2} {count}" for x, count in sorted(report.profile.items()))
    return "\n".join(lines)


def render_bounds(report):
    lines = _rows([
        ("d", report.d),
        ("alpha", f"{report.alpha:.6f}"),
        ("lambda_star", f"{report.lambda_star:.6f}"),
        ("x_start", report.x_start),
        ("f_bound", f"{report.f_bound:.4f}"),
        ("rtd_bound", f"{report.rtd_bound:.4f}"),
    ])
    if report.ts_size is not None:
        lines.extend(_rows([("ts_size", report.ts_size)]))
    if report.chain:
        lines.append("")
        lines.append(f"{'x':>4} {'y':>10} {'k':>6} {'added':>6} {'|C^Y,b|':>8}")
        for step in report.chain:
            lines.append(
                f"{step.x:>4} {step.y:>10} {_blank(step.k):>6} "
                f"{_blank(step.added):>6} {_blank(step.restriction_size):>8}"
            )
    return "\n".join(lines)


def _blank(value):
    return "-" if value is None else value
