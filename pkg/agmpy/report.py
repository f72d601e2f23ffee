"""Per-field jobs and the commands that assemble their reports."""

import csv
import io
import logging
import os
import sys
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

import attr

import agmpy.config as conf
from agmpy.const import (
    CSV_CLASSIFY_COLUMNS,
    CSV_COUNT_COLUMNS,
    CSV_NODE_COLUMNS,
    CSV_SCAN_COLUMNS,
    CSV_VERIFY_COLUMNS,
    EXPORT_FILE_TEMPLATE,
)
import agmpy.curve
import agmpy.dynamics
import agmpy.exceptions
from agmpy.field import FieldCtx, make_field
import agmpy.ratio
import agmpy.sweep
import agmpy.swarm
import agmpy.types as t
from agmpy.types import INFINITY, Node

LOGGER = logging.getLogger(__name__)

Outcome = Tuple[bool, Any]

# Depth at which S^adv_n and S^back_n stop shrinking
STABLE_DEPTH = {t.CongruenceClass.Q_3_MOD_4: 1, t.CongruenceClass.Q_5_MOD_8: 2}
POPULATION_DEPTHS = (0, 1, 2, INFINITY)


@attr.s(frozen=True)
class CheckResult:
    q: int = attr.ib()
    statement: str = attr.ib()
    status: t.CheckStatus = attr.ib()
    witness: str = attr.ib(default="")
    experimental: bool = attr.ib(default=False)

    def as_row(self) -> Tuple:
        statement = self.statement + (" (experimental)" if self.experimental else "")
        return self.q, statement, self.status.value, self.witness


@attr.s
class FieldReport:
    spec: t.FieldSpec = attr.ib()
    checks: List[CheckResult] = attr.ib(factory=list)
    notes: List[str] = attr.ib(factory=list)

    @property
    def failed(self) -> bool:
        return any(
            c.status is t.CheckStatus.FAIL and not c.experimental for c in self.checks
        )

    def add(self, statement: str, outcome: Outcome, experimental: bool = False) -> None:
        ok, witness = outcome
        status = t.CheckStatus.of(ok)
        witness_text = "" if ok or witness is None else str(witness)
        if status is t.CheckStatus.FAIL and not experimental:
            LOGGER.error("[%s] FAIL %s: %s", self.spec, statement, witness_text)
        self.checks.append(
            CheckResult(self.spec.q, statement, status, witness_text, experimental)
        )

    def check(
        self,
        statement: str,
        func: Callable[[], Outcome],
        experimental: bool = False,
    ) -> None:
        """Run func, turning a contract violation into a FAIL with its witness."""
        try:
            outcome = func()
        except agmpy.exceptions.StructureViolation as exc:
            outcome = (False, exc.witness)
        except agmpy.exceptions.DynamicsException as exc:
            outcome = (False, exc)
        self.add(statement, outcome, experimental)

    def skip(self, statement: str, reason: str) -> None:
        self.checks.append(
            CheckResult(self.spec.q, statement, t.CheckStatus.SKIP, reason)
        )


def _holds(ok: bool, witness: Any = None) -> Outcome:
    return ok, witness


def _first_failure(items: Iterable, predicate: Callable[[Any], bool]) -> Outcome:
    for item in items:
        if not predicate(item):
            return False, item
    return True, None


def _equal(left, right) -> Outcome:
    return left == right, f"{left} != {right}"


def _set_equal(left: frozenset, right: frozenset) -> Outcome:
    if left == right:
        return True, None
    return False, min(left ^ right)


def verify_field(p: int, deg: int, max_q: int, node_check_limit: int) -> FieldReport:
    ctx = make_field(p, deg)
    report = FieldReport(ctx.spec)

    trace = agmpy.curve.trace_record(ctx, max_q)
    report.add("Hasse bound", _holds(agmpy.curve.hasse_holds(ctx.q, trace.a_q_cm), trace))
    if ctx.q > max_q:
        for statement in ("CM trace equals point count", "k-level checks"):
            report.skip(statement, f"q > {max_q}")
        return report
    report.add(
        "CM trace equals point count",
        _holds(trace.consistent, f"cm={trace.a_q_cm} brute={trace.a_q_brute}"),
    )

    census = agmpy.ratio.KCensus.new(ctx)
    _verify_k_level(ctx, report, census)
    if ctx.congruence_class is t.CongruenceClass.Q_1_MOD_8:
        _verify_multivalued(ctx, report, census)
    else:
        _verify_swarm(ctx, report, census, ctx.q <= node_check_limit)

    if ctx.q > node_check_limit:
        report.skip("node-level checks", f"q > {node_check_limit}")
    else:
        _verify_nodes(ctx, report, census)
    return report


def _verify_k_level(ctx: FieldCtx, report: FieldReport, census) -> None:
    ks = agmpy.ratio.nontrivial_ks(ctx)
    sigma = agmpy.ratio.sigma
    report.check(
        "sigma is an involution on T_K",
        lambda: _first_failure(ks, lambda k: sigma(ctx, sigma(ctx, k)) == k),
    )
    report.check(
        "sigma reverses k-advancement",
        lambda: _holds(agmpy.ratio.verify_sigma_reversal(ctx)),
    )
    report.check(
        "sigma rescales the edge relation",
        lambda: _first_failure(
            (
                (k1, k2)
                for k1 in ks
                for k2 in agmpy.ratio.k_children(ctx, k1) + (k1,)
            ),
            lambda e: agmpy.ratio.sigma_identity_holds(ctx, *e),
        ),
    )

    birational = agmpy.ratio.birational_roundtrip(ctx)
    report.add(
        "curve and quartic maps invert each other",
        _holds(not birational.roundtrip_failures, birational.roundtrip_failures[:1]),
    )
    report.add(
        "sigma carries curve chains to quartic chains",
        _holds(not birational.diagram_failures, birational.diagram_failures[:1]),
    )
    report.add(
        "maximum tentacle length equals maximum colon length",
        _equal(census.tentacle_max(), census.colon_max()),
    )
    report.add(
        "whole k-graph degree profile is reversal symmetric",
        _holds(agmpy.swarm.whole_graph_profile_symmetric(ctx)),
        experimental=True,
    )


def _verify_multivalued(ctx: FieldCtx, report: FieldReport, census) -> None:
    for direction in (t.Direction.ADVANCE, t.Direction.BACKTRACK):
        graph = agmpy.swarm.build_k_graph(ctx, direction, census)
        report.add(
            f"restricted k-graph is single-valued ({direction.value})",
            _holds(agmpy.swarm.k_graph_single_valued(graph, direction)),
            experimental=True,
        )
    report.add(
        "T^adv_inf and T^back_inf have equal size",
        _equal(len(census.adv_set(INFINITY)), len(census.back_set(INFINITY))),
    )


def _verify_swarm(
    ctx: FieldCtx, report: FieldReport, census, build_graphs: bool
) -> None:
    regime = ctx.congruence_class
    t_adv, s_adv = agmpy.curve.predicted_population(ctx.q)

    report.add(
        "closed-form T^adv_inf matches exhaustive peeling",
        _set_equal(agmpy.ratio.t_adv_infinity(ctx), census.adv_set(INFINITY)),
    )
    report.add(
        "closed-form T^back_inf matches exhaustive peeling",
        _set_equal(agmpy.ratio.t_back_infinity(ctx), census.back_set(INFINITY)),
    )
    report.add("|T^adv_inf| matches prediction", _equal(len(census.adv_set(INFINITY)), t_adv))

    if not build_graphs:
        report.skip("swarm graph checks", "q exceeds node_check_limit")
        return
    try:
        adv = agmpy.swarm.build_adv_graph(ctx, census)
        back = agmpy.swarm.build_back_graph(ctx, census)
    except agmpy.exceptions.DynamicsException as exc:
        report.add("swarm graphs build", (False, exc))
        return
    except agmpy.exceptions.StructureViolation as exc:
        report.add("swarm graphs build", (False, exc.witness))
        return
    report.add("|S^adv_inf| matches prediction", _equal(len(adv), s_adv))
    report.add("|S^back_inf| matches prediction", _equal(len(back), s_adv))
    report.add(
        "advancement is single-valued on S^adv_inf",
        _first_failure(adv.vertices(), lambda v: adv.graph.out_degree(v) == 1),
    )
    report.add(
        "backtracking is single-valued on S^back_inf",
        _first_failure(back.vertices(), lambda v: back.graph.in_degree(v) == 1),
    )

    decomposed = {}
    for g in (adv, back):
        statement = f"jellyfish shape ({g.direction.value})"
        try:
            decomposed[g.direction] = agmpy.swarm.decompose(g)
        except agmpy.exceptions.StructureViolation as exc:
            report.add(statement, (False, exc.witness))
        else:
            report.add(statement, (True, None))
    if len(decomposed) != 2:
        return
    adv_components = decomposed[t.Direction.ADVANCE]
    back_components = decomposed[t.Direction.BACKTRACK]

    factor = agmpy.swarm.COMPONENT_FACTOR[regime]
    cyclic = adv.cyclic_vertices()
    report.add(f"|S^cyc| is 1/{factor} of |S^adv_inf|", _equal(factor * len(cyclic), len(adv)))
    report.add(
        "S^adv_inf and S^back_inf share their cycles",
        _set_equal(cyclic, back.cyclic_vertices()),
    )
    report.add(
        "node cycles lift from k-cycles",
        _equal(
            sorted(len(c.cycle) for c in adv_components),
            agmpy.ratio.node_cycle_lengths(ctx, census),
        ),
    )
    report.add(
        "S^adv_inf is the reversal of S^back_inf",
        _equal(
            agmpy.swarm.signature_multiset(adv_components),
            agmpy.swarm.signature_multiset(back_components),
        ),
    )
    expected_max = STABLE_DEPTH[regime] if adv_components else 0
    report.add("maximum tentacle length", _equal(census.tentacle_max(), expected_max))

    if regime is t.CongruenceClass.Q_5_MOD_8:
        report.add(
            "y^2 = 2x(1+x^2), y^2 = x^3-x and y^2 = x^3+4x are isomorphic",
            _holds(agmpy.curve.curve_isomorphism_check(ctx)),
        )
        report.add("eight excluded curve points", _equal(agmpy.curve.excluded_point_count(ctx), 8))
        report.add(
            "|T^adv_inf| is a quarter of the remaining curve points",
            _equal(agmpy.curve.t_adv_from_curve(ctx), t_adv),
        )

    if adv_components:
        report.notes.append(f"{len(adv)} vertices in {len(adv_components)} jellyfish")
    else:
        report.notes.append("empty swarm")


def _verify_nodes(ctx: FieldCtx, report: FieldReport, census) -> None:
    nodes = agmpy.dynamics.NodeCensus.new(ctx)
    for n in POPULATION_DEPTHS:
        label = "inf" if n == INFINITY else n
        report.add(
            f"|S^adv_{label}| equals |S^back_{label}|",
            _equal(len(nodes.adv_set(n)), len(nodes.back_set(n))),
        )
    report.add(
        "node and k-value appendage maxima agree",
        _equal(
            (nodes.tentacle_max(), nodes.colon_max()),
            (census.tentacle_max(), census.colon_max()),
        ),
    )

    everything = nodes.nodes()
    report.check(
        "inheritance and parent identities",
        lambda: _first_failure(
            ((n, c) for n in everything for c in agmpy.dynamics.children(ctx, n)),
            lambda e: agmpy.dynamics.inheritance_identity_holds(ctx, *e)
            and agmpy.dynamics.parent_identity_holds(ctx, *e),
        ),
    )
    report.check(
        "sibling product identity",
        lambda: _first_failure(
            everything, lambda n: agmpy.dynamics.sibling_product_identity_holds(ctx, n)
        ),
    )

    regime = ctx.congruence_class
    if regime is t.CongruenceClass.Q_1_MOD_8:
        return

    report.check(
        "advancement criterion matches exhaustive depth",
        lambda: _first_failure(
            everything,
            lambda n: agmpy.dynamics.is_adv_infinite_criterion(ctx, n)
            == (nodes.adv_depth(n) == INFINITY),
        ),
    )
    report.check(
        "backtracking criterion matches exhaustive depth",
        lambda: _first_failure(
            everything,
            lambda n: agmpy.dynamics.is_back_infinite_criterion(ctx, n)
            == (nodes.back_depth(n) == INFINITY),
        ),
    )
    stable = STABLE_DEPTH[regime]
    report.add(
        f"S^adv_{stable} equals S^adv_inf",
        _set_equal(nodes.adv_set(stable), nodes.adv_set(INFINITY)),
    )
    report.add(
        f"S^back_{stable} equals S^back_inf",
        _set_equal(nodes.back_set(stable), nodes.back_set(INFINITY)),
    )

    if regime is not t.CongruenceClass.Q_5_MOD_8:
        return
    report.check(
        "sibling product is never a fourth power",
        lambda: _first_failure(sorted(nodes.adv_set(2)), lambda n: _sibling_obstructed(ctx, n)),
    )
    report.check(
        "twice-backtrack identity",
        lambda: _first_failure(
            (
                (g, n)
                for n in everything
                for m in agmpy.dynamics.parents(ctx, n)
                for g in agmpy.dynamics.parents(ctx, m)
            ),
            lambda pair: agmpy.dynamics.twice_backtrack_identity_holds(ctx, *pair),
        ),
    )
    report.check(
        "parents are backtrackable together",
        lambda: _first_failure(
            everything,
            lambda n: agmpy.dynamics.parental_backtrackability_holds(ctx, n),
        ),
    )


def _sibling_obstructed(ctx: FieldCtx, n: Node) -> bool:
    big_a, big_b = agmpy.dynamics.sibling_product(ctx, n)
    return not ctx.is_fourth_power(ctx.mul(big_a, big_b))


@attr.s(frozen=True)
class CountRow:
    q: int = attr.ib()
    p: int = attr.ib()
    deg: int = attr.ib()
    congruence: t.CongruenceClass = attr.ib()
    a_cm: int = attr.ib()
    a_brute: Optional[int] = attr.ib()
    t_adv: Optional[int] = attr.ib(default=None)
    s_adv: Optional[int] = attr.ib(default=None)
    s_cyc: Optional[int] = attr.ib(default=None)
    cycles: Optional[Tuple[int, ...]] = attr.ib(default=None)
    tentacle_max: Optional[int] = attr.ib(default=None)
    colon_max: Optional[int] = attr.ib(default=None)
    predicted_t_adv: Optional[int] = attr.ib(default=None)
    predicted_s_adv: Optional[int] = attr.ib(default=None)
    note: str = attr.ib(default="")

    @property
    def consistent(self) -> bool:
        if self.a_brute is not None and self.a_brute != self.a_cm:
            return False
        if self.predicted_s_adv is not None and self.s_adv is not None:
            return self.predicted_s_adv == self.s_adv
        return True

    def as_row(self) -> Tuple:
        cycles = None
        if self.cycles is not None:
            cycles = "{" + ",".join(str(c) for c in sorted(self.cycles, reverse=True)) + "}"
        return (
            self.q,
            self.p,
            self.deg,
            self.congruence.value,
            self.a_cm,
            self.a_brute,
            self.t_adv,
            self.s_adv,
            self.s_cyc,
            cycles,
            self.tentacle_max,
            self.colon_max,
        )


def count_field(p: int, deg: int, max_q: int) -> CountRow:
    ctx = make_field(p, deg)
    trace = agmpy.curve.trace_record(ctx, max_q)
    row = CountRow(
        q=ctx.q,
        p=p,
        deg=deg,
        congruence=ctx.congruence_class,
        a_cm=trace.a_q_cm,
        a_brute=trace.a_q_brute,
        predicted_t_adv=trace.predicted_t_adv,
        predicted_s_adv=trace.predicted_s_adv,
    )
    if ctx.q > max_q:
        LOGGER.warning("[%s] too large to enumerate (limit %s)", ctx.label, max_q)
        return attr.evolve(row, note=f"q > {max_q}")

    census = agmpy.ratio.KCensus.new(ctx)
    t_adv = len(census.adv_set(INFINITY))
    cycles = None
    if ctx.congruence_class is not t.CongruenceClass.Q_1_MOD_8:
        cycles = tuple(agmpy.ratio.node_cycle_lengths(ctx, census))
    return attr.evolve(
        row,
        t_adv=t_adv,
        s_adv=(ctx.q - 1) * t_adv,
        s_cyc=(ctx.q - 1) * len(census.cyclic_set()),
        cycles=cycles,
        tentacle_max=census.tentacle_max(),
        colon_max=census.colon_max(),
    )


@attr.s(frozen=True)
class ScanRow:
    q: int = attr.ib()
    p: int = attr.ib()
    deg: int = attr.ib()
    congruence: t.CongruenceClass = attr.ib()
    tentacle_max: Optional[int] = attr.ib(default=None)
    colon_max: Optional[int] = attr.ib(default=None)
    adv_single_valued: Optional[bool] = attr.ib(default=None)
    back_single_valued: Optional[bool] = attr.ib(default=None)

    @property
    def equal(self) -> Optional[bool]:
        if self.tentacle_max is None:
            return None
        return self.tentacle_max == self.colon_max

    def as_row(self) -> Tuple:
        return (
            self.q,
            self.p,
            self.deg,
            self.congruence.value,
            self.tentacle_max,
            self.colon_max,
            self.equal,
            self.adv_single_valued,
            self.back_single_valued,
        )


def scan_field(p: int, deg: int, max_q: int) -> ScanRow:
    ctx = make_field(p, deg)
    row = ScanRow(ctx.q, p, deg, ctx.congruence_class)
    if ctx.q > max_q:
        LOGGER.warning("[%s] too large to scan (limit %s)", ctx.label, max_q)
        return row
    census = agmpy.ratio.KCensus.new(ctx)
    flags = [
        agmpy.swarm.k_graph_single_valued(
            agmpy.swarm.build_k_graph(ctx, direction, census), direction
        )
        for direction in (t.Direction.ADVANCE, t.Direction.BACKTRACK)
    ]
    row = attr.evolve(
        row,
        tentacle_max=census.tentacle_max(),
        colon_max=census.colon_max(),
        adv_single_valued=flags[0],
        back_single_valued=flags[1],
    )
    if not row.equal:
        LOGGER.error(
            "[%s] maximum tentacle length %s differs from maximum colon length %s",
            ctx.label,
            row.tentacle_max,
            row.colon_max,
        )
    return row


@attr.s(frozen=True)
class ClassifyReport:
    q: int = attr.ib()
    populations: Tuple[Tuple[t.Depth, int, int], ...] = attr.ib()
    cyclic: int = attr.ib()
    node: Optional[Node] = attr.ib(default=None)
    node_class: Optional[t.AdvClass] = attr.ib(default=None)

    @property
    def node_kind(self) -> str:
        c = self.node_class
        if c.cyclic:
            return "cyclic"
        if c.tentacle:
            return "tentacle"
        if c.colon:
            return "colon"
        return "transient"


def classify_field(p: int, deg: int, max_q: int, node: Optional[Node] = None) -> ClassifyReport:
    ctx = make_field(p, deg)
    census = agmpy.dynamics.NodeCensus.new(ctx, max_q)
    populations = tuple(
        (n, len(census.adv_set(n)), len(census.back_set(n))) for n in POPULATION_DEPTHS
    )
    node_class = None
    if node is not None:
        if node.a >= ctx.q or node.b >= ctx.q or not agmpy.dynamics.is_nontrivial(
            ctx, node
        ):
            raise agmpy.exceptions.TrivialNode(node)
        node_class = census.classify(node)
    return ClassifyReport(ctx.q, populations, len(census.cyclic_set()), node, node_class)


def export_field(
    p: int, deg: int, max_q: int, direction: t.Direction, fmt: t.OutputFormat
) -> List[Tuple[str, bytes]]:
    """(file name, document) per requested direction."""
    ctx = make_field(p, deg)
    ctx.require_enumerable(max_q)
    directions = (
        (t.Direction.ADVANCE, t.Direction.BACKTRACK)
        if direction is t.Direction.BOTH
        else (direction,)
    )
    census = None
    if ctx.congruence_class is t.CongruenceClass.Q_1_MOD_8:
        census = agmpy.ratio.KCensus.new(ctx)
    documents = []
    for d in directions:
        if d is t.Direction.ADVANCE:
            g = agmpy.swarm.build_adv_graph(ctx, census)
        else:
            g = agmpy.swarm.build_back_graph(ctx, census)
        name = EXPORT_FILE_TEMPLATE.format(q=ctx.q, direction=d.value, ext=fmt.value)
        documents.append((name, agmpy.swarm.export_graph(g, fmt)))
    return documents


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if value == INFINITY:
        return "inf"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_text(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    cells = [list(columns)] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def render_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows([_cell(v) for v in row] for row in rows)
    return buf.getvalue()


def render(fmt: t.OutputFormat, columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    if fmt is t.OutputFormat.CSV:
        return render_csv(columns, rows)
    if fmt is t.OutputFormat.TEXT:
        return render_text(columns, rows)
    raise agmpy.exceptions.UnsupportedFormat(fmt)


def _emit(config: dict, text: str) -> None:
    path = config.get(conf.CONF_OUT)
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as exc:
        raise agmpy.exceptions.ExportError(path, exc.strerror or str(exc)) from exc


async def cmd_verify(config: dict) -> int:
    sweep = agmpy.sweep.Sweep.new(config)
    reports = await sweep.run(
        verify_field, config[conf.CONF_MAX_Q], config[conf.CONF_NODE_CHECK_LIMIT]
    )
    fmt = config[conf.CONF_FORMAT]
    rows = [c.as_row() for r in reports for c in r.checks]
    text = render(fmt, CSV_VERIFY_COLUMNS, rows)
    if fmt is t.OutputFormat.TEXT:
        text += "".join(f"# {r.spec}: {note}\n" for r in reports for note in r.notes)
    _emit(config, text)
    return 1 if any(r.failed for r in reports) else 0


async def cmd_count(config: dict) -> int:
    sweep = agmpy.sweep.Sweep.new(config)
    rows = await sweep.run(count_field, config[conf.CONF_MAX_Q])
    fmt = config[conf.CONF_FORMAT]
    if fmt is t.OutputFormat.TEXT:
        columns = CSV_COUNT_COLUMNS + ("t_pred", "s_pred", "note")
        body = [r.as_row() + (r.predicted_t_adv, r.predicted_s_adv, r.note) for r in rows]
    else:
        columns = CSV_COUNT_COLUMNS
        body = [r.as_row() for r in rows]
    _emit(config, render(fmt, columns, body))
    return 0 if all(r.consistent for r in rows) else 1


async def cmd_scan(config: dict) -> int:
    sweep = agmpy.sweep.Sweep.new(config)
    rows = await sweep.run(scan_field, config[conf.CONF_MAX_Q])
    _emit(config, render(config[conf.CONF_FORMAT], CSV_SCAN_COLUMNS, [r.as_row() for r in rows]))
    return 0 if all(r.equal is not False for r in rows) else 1


async def cmd_classify(config: dict) -> int:
    sweep = agmpy.sweep.Sweep.new(config)
    reports = await sweep.run(
        classify_field, config[conf.CONF_MAX_Q], config.get(conf.CONF_NODE)
    )
    fmt = config[conf.CONF_FORMAT]
    rows = [(r.q, n, adv, back) for r in reports for n, adv, back in r.populations]
    rows += [(r.q, "cyc", r.cyclic, r.cyclic) for r in reports]
    text = render(fmt, CSV_CLASSIFY_COLUMNS, rows)
    classified = [r for r in reports if r.node is not None]
    if classified:
        text += "\n" + render(
            fmt,
            CSV_NODE_COLUMNS,
            [
                (r.q, str(r.node), r.node_class.adv_depth, r.node_class.back_depth, r.node_kind)
                for r in classified
            ],
        )
    _emit(config, text)
    return 0


async def cmd_export(config: dict) -> int:
    sweep = agmpy.sweep.Sweep.new(config)
    batches = await sweep.run(
        export_field,
        config[conf.CONF_MAX_Q],
        config[conf.CONF_DIRECTION],
        config[conf.CONF_FORMAT],
    )
    out_dir = config.get(conf.CONF_OUT) or os.curdir
    for name, data in (doc for batch in batches for doc in batch):
        path = os.path.join(out_dir, name)
        try:
            with open(path, "wb") as f:
                f.write(data)
        except OSError as exc:
            raise agmpy.exceptions.ExportError(path, exc.strerror or str(exc)) from exc
        LOGGER.info("wrote %s", path)
        sys.stdout.write(path + "\n")
    return 0


COMMANDS = {
    t.Command.VERIFY: cmd_verify,
    t.Command.COUNT: cmd_count,
    t.Command.SCAN: cmd_scan,
    t.Command.CLASSIFY: cmd_classify,
    t.Command.EXPORT: cmd_export,
}
