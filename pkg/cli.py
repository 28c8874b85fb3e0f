"""
CLI interface for the braid workbench.

Usage:
    python -m cli check graphs/star.graph
    python -m cli present graphs/artin4.graph [--report json]
    python -m cli nf "s1 s2 s1'" --strands 3
    python -m cli eq "s1 s2 s1" "s2 s1 s2" --strands 3
    python -m cli poseq "1-2a 2-3a 1-2a" "2-3a 1-2a 2-3a" --artin 3
    python -m cli express graphs/star.graph --index 1
    python -m cli family StarFan --k 3
    python -m cli family Rectangle --sweep
    python -m cli classify graphs/k4.graph

Exit status: 0 verified/true, 1 refuted/false, 2 inconclusive,
64 usage error, 65 input format error.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Optional

# Ensure project root on path and load .env
_project_root = Path(__file__).resolve().parent
if str(_project_root) not in sys.path:
    sys.path.insert(0, str(_project_root))
import config  # noqa: F401  # loads .env

import click

from braid_service import __version__
from braid_service.errors import (
    BraidServiceError,
    GraphFormatError,
    InvalidChordError,
    InvalidWordError,
    SearchCapExceeded,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_FORMAT = 65

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger("cli")


class WorkbenchGroup(click.Group):
    """Click group that maps usage and input errors to the workbench exit statuses."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_FALSE)
        except (GraphFormatError, InvalidWordError, InvalidChordError) as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(EXIT_FORMAT)
        except SearchCapExceeded as exc:
            click.echo(f"Inconclusive: {exc}", err=True)
            sys.exit(EXIT_INCONCLUSIVE)
        except BraidServiceError as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(EXIT_FALSE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


report_option = click.option(
    "--report", type=click.Choice(["text", "json"]), default="text", show_default=True,
    help="Output format",
)
cap_option = click.option("--cap", type=click.IntRange(min=1), default=None, help="Override the search cap")


def _emit(report: str, model, text: str) -> None:
    if report == "json":
        click.echo(model.model_dump_json(indent=2))
    else:
        click.echo(text)


def _read_text(path: str) -> str:
    from braid_service.errors import GraphFormatError

    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path} is not valid UTF-8: {exc}") from exc


def _load_graph(path: str):
    from braid_service import load_graph

    file = Path(path)
    return load_graph(file.read_bytes(), file.name)


@click.group(cls=WorkbenchGroup)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.version_option(version=__version__, message="%(version)s")
def main(verbose: bool):
    """Braid workbench: presentations of braid groups from chord graphs."""
    from config import config

    level = logging.DEBUG if verbose else getattr(logging, config.log_level, logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


@main.command()
@click.argument("graph_path", type=click.Path(exists=True, dir_okay=False))
@report_option
@cap_option
def check(graph_path: str, report: str, cap: Optional[int]):
    """Decide whether a graph is linearly spanned."""
    from braid_service.exporters import CheckReport
    from braid_service.graphs import build_arrangement, pseudo_face_witness

    g = _load_graph(graph_path)
    connected = g.is_connected()
    witness = pseudo_face_witness(g, cap)
    spanned = connected and witness is None
    model = CheckReport(
        linearly_spanned=spanned,
        connected=connected,
        witness=witness.to_dict() if witness else None,
        arrangement=build_arrangement(g).to_dict(),
    )
    if spanned:
        text = "linearly spanned"
    elif witness is not None:
        text = (
            f"not linearly spanned: vertex {witness.enclosed_vertex} lies in a pseudo face "
            f"bounded by {' -> '.join(witness.boundary_cycle)}"
        )
    else:
        text = "not linearly spanned: graph is disconnected"
    _emit(report, model, text)
    sys.exit(EXIT_OK if spanned else EXIT_FALSE)


@main.command()
@click.argument("graph_path", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--artin", "artin_n", type=click.IntRange(min=2), default=None, help="Artin presentation on n strands")
@click.option("--band", "band_n", type=click.IntRange(min=2), default=None, help="Band-generator presentation on n strands")
@click.option("--provenance", is_flag=True, help="Annotate relations with their template")
@report_option
def present(graph_path: Optional[str], artin_n: Optional[int], band_n: Optional[int], provenance: bool, report: str):
    """Generate a positive presentation from a graph."""
    from braid_service.exporters import PresentationExporter
    from braid_service.presentations import artin_presentation, band_presentation, generate_presentation

    if sum(x is not None for x in (graph_path, artin_n, band_n)) != 1:
        raise click.UsageError("Give exactly one of GRAPH_PATH, --artin or --band")
    if artin_n is not None:
        p = artin_presentation(artin_n)
    elif band_n is not None:
        p = band_presentation(band_n)
    else:
        p = generate_presentation(_load_graph(graph_path))
    if report == "json":
        click.echo(PresentationExporter.to_json(p))
    else:
        click.echo(PresentationExporter.to_text(p, with_provenance=provenance), nl=False)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("word")
@click.option("--strands", "-n", type=click.IntRange(min=2), required=True)
@report_option
def nf(word: str, strands: int, report: str):
    """Left-greedy normal form of an Artin word."""
    from braid_service.braid import normal_form
    from braid_service.exporters import NormalFormReport
    from braid_service.parsers import parse_artin_word

    w = parse_artin_word(word, strands)
    result = normal_form(w)
    data = result.to_dict()
    model = NormalFormReport(
        word=str(w),
        strands=strands,
        infimum=result.infimum,
        factors=data["factors"],
        canonical_length=result.canonical_length,
    )
    factors = " ".join("[" + " ".join(str(i) for i in f) + "]" for f in data["factors"])
    _emit(report, model, f"D^{result.infimum} {factors}".rstrip())
    sys.exit(EXIT_OK)


@main.command()
@click.argument("left")
@click.argument("right")
@click.option("--strands", "-n", type=click.IntRange(min=2), required=True)
@report_option
def eq(left: str, right: str, strands: int, report: str):
    """Decide whether two Artin words are the same braid."""
    from braid_service.braid import equals
    from braid_service.exporters import EqualityReport
    from braid_service.parsers import parse_artin_word

    w1, w2 = parse_artin_word(left, strands), parse_artin_word(right, strands)
    result = equals(w1, w2)
    model = EqualityReport(left=str(w1), right=str(w2), strands=strands, equal=result)
    _emit(report, model, "equal" if result else "not equal")
    sys.exit(EXIT_OK if result else EXIT_FALSE)


@main.command()
@click.argument("left")
@click.argument("right")
@click.option("--graph", "graph_path", type=click.Path(exists=True, dir_okay=False), help="Use the presentation generated from this graph")
@click.option("--presentation", "presentation_path", type=click.Path(exists=True, dir_okay=False), help="Presentation text file")
@click.option("--artin", "artin_n", type=click.IntRange(min=2), default=None)
@click.option("--band", "band_n", type=click.IntRange(min=2), default=None)
@report_option
@cap_option
def poseq(left, right, graph_path, presentation_path, artin_n, band_n, report, cap):
    """Decide positive equivalence of two words over chord generators."""
    from braid_service.exporters import PositiveEquivalenceReport
    from braid_service.monoid import Verdict, pos_equiv
    from braid_service.parsers import parse_positive_word, parse_presentation_text
    from braid_service.presentations import artin_presentation, band_presentation, generate_presentation

    sources = (graph_path, presentation_path, artin_n, band_n)
    if sum(x is not None for x in sources) != 1:
        raise click.UsageError("Give exactly one of --graph, --presentation, --artin or --band")
    if graph_path:
        p = generate_presentation(_load_graph(graph_path))
    elif presentation_path:
        p = parse_presentation_text(_read_text(presentation_path))
    elif artin_n is not None:
        p = artin_presentation(artin_n)
    else:
        p = band_presentation(band_n)

    w1 = parse_positive_word(left, p.generator_ids)
    w2 = parse_positive_word(right, p.generator_ids)
    verdict = pos_equiv(w1, w2, p.relations, cap=cap)
    model = PositiveEquivalenceReport(
        left=list(w1),
        right=list(w2),
        relation_count=len(p.relations),
        status=verdict.status.value,
        explored=verdict.explored,
        trace=[s.to_dict() for s in verdict.trace],
    )
    lines = [verdict.status.value]
    for step in verdict.trace:
        lines.append(f"  {' '.join(step.after)}    by {step.relation} at {step.position}")
    if verdict.status is Verdict.NOT_EQUIVALENT:
        lines.append(f"  closed class of {verdict.explored} words")
    _emit(report, model, "\n".join(lines))
    codes = {
        Verdict.EQUIVALENT: EXIT_OK,
        Verdict.NOT_EQUIVALENT: EXIT_FALSE,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }
    sys.exit(codes[verdict.status])


@main.command()
@click.argument("graph_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--index", "-i", "index", type=click.IntRange(min=1), required=True, help="Artin generator index")
@click.option("--depth", type=click.IntRange(min=0), default=None, help="Conjugator length limit")
@report_option
def express(graph_path: str, index: int, depth: Optional[int], report: str):
    """Write sigma_i as a conjugate W a W^-1 of a graph generator."""
    from braid_service.exporters import ExpressionReport
    from braid_service.models import Presentation
    from braid_service.presentations import express_artin_generator

    g = _load_graph(graph_path)
    if index >= g.n:
        raise click.UsageError(f"--index must be below the vertex count {g.n}")
    expression = express_artin_generator(Presentation(graph=g), index, depth)
    data = expression.to_dict()
    model = ExpressionReport(index=index, base=expression.base, conjugator=data["conjugator"])
    if data["conjugator"]:
        conjugator = " ".join(data["conjugator"])
        text = f"s{index} = ({conjugator}) {expression.base} ({conjugator})^-1"
    else:
        text = f"s{index} = {expression.base}"
    _emit(report, model, text)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("name")
@click.option("--k", "k", type=click.IntRange(min=1), default=1, show_default=True, help="Growth parameter")
@click.option("--m", "m", type=click.IntRange(min=4), default=None, help="Polygon size for MGon/PseudoMGon")
@click.option("--sweep", is_flag=True, help="Verify every k from 1 to BRAID_K_MAX instead of one --k")
@click.option("--skip-poseq", is_flag=True, help="Skip the positive equivalence search")
@click.option("--skip-lemma", is_flag=True, help="Skip the length lemma checks")
@report_option
@cap_option
def family(
    name: str, k: int, m: Optional[int], sweep: bool, skip_poseq: bool, skip_lemma: bool, report: str,
    cap: Optional[int],
):
    """Verify a counterexample family instance, or sweep k up to BRAID_K_MAX."""
    from braid_service.exporters import FamilySweepReport
    from braid_service.families import family_registry
    from config import config

    ks = range(1, config.k_max + 1) if sweep else [k]
    try:
        instances = [family_registry.instance(name, value, m) for value in ks]
    except (KeyError, ValueError) as exc:
        raise click.UsageError(str(exc.args[0] if exc.args else exc)) from None

    results = [_verify_family(inst, skip_poseq, skip_lemma, cap) for inst in instances]
    if sweep:
        logger.info("swept %s for k=1..%d", name, config.k_max)
        model = FamilySweepReport(family=instances[0].family, k_max=config.k_max, reports=[r[0] for r in results])
        _emit(report, model, "\n".join(r[1] for r in results))
    else:
        _emit(report, results[0][0], results[0][1])
    # worst status wins: refuted, then inconclusive
    statuses = {r[2] for r in results}
    for status in (EXIT_FALSE, EXIT_INCONCLUSIVE):
        if status in statuses:
            sys.exit(status)
    sys.exit(EXIT_OK)


def _verify_family(inst, skip_poseq: bool, skip_lemma: bool, cap: Optional[int]):
    """Report model, text block and exit status for one instance."""
    from braid_service.exporters import FamilyReport
    from braid_service.families import (
        check_length_lemma_hypotheses,
        replay_chain,
        verify_group_equality,
        verify_non_positive_equivalence,
    )
    from braid_service.monoid import Verdict

    group_equal = verify_group_equality(inst)
    chain = replay_chain(inst)
    non_eq = None if skip_poseq else verify_non_positive_equivalence(inst, cap=cap)
    lemma = None if skip_lemma else check_length_lemma_hypotheses(inst, cap=cap)

    model = FamilyReport(
        instance=inst.to_dict(),
        group_equal=group_equal,
        chain=[s.to_dict() for s in chain],
        non_equivalence=non_eq.to_dict() if non_eq else None,
        length_lemma=lemma.to_dict() if lemma else None,
    )
    lines = [
        f"{inst.family} k={inst.k}",
        f"  W  = {inst.render(inst.w)}",
        f"  W' = {inst.render(inst.w_prime)}",
        f"  group equal: {group_equal} ({len(chain)} chain words)",
    ]
    if non_eq:
        lines.append(
            f"  positive equivalence: {non_eq.verdict.status.value} "
            f"(|W|={non_eq.word_length}, longest relation {non_eq.max_relation_length}, "
            f"{non_eq.verdict.explored} words)"
        )
    if lemma:
        lines.append(f"  length lemma: {'holds' if lemma.holds else 'fails'}" + (" (inconclusive)" if lemma.inconclusive else ""))

    if not group_equal:
        status = EXIT_FALSE
    elif (non_eq and non_eq.verdict.status is Verdict.INCONCLUSIVE) or (lemma and lemma.inconclusive):
        status = EXIT_INCONCLUSIVE
    elif (non_eq and non_eq.verdict.status is Verdict.EQUIVALENT) or (lemma and not lemma.holds):
        status = EXIT_FALSE
    else:
        status = EXIT_OK
    return model, "\n".join(lines), status


@main.command()
@click.argument("graph_path", type=click.Path(exists=True, dir_okay=False))
@report_option
def classify(graph_path: str, report: str):
    """Embedding class of a linearly spanned graph."""
    from braid_service.exporters import ClassifyReport
    from braid_service.graphs import classify_graph

    result = classify_graph(_load_graph(graph_path))
    model = ClassifyReport(kind=result.kind, detail=result.detail, has_embedding=result.has_embedding)
    _emit(report, model, str(result))
    codes = {"has_embedding": EXIT_OK, "no_embedding": EXIT_FALSE}
    sys.exit(codes.get(result.kind, EXIT_INCONCLUSIVE))


if __name__ == "__main__":
    main()
