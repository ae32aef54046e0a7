import argparse
import contextlib
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from bvpds.engine import top_grothendieck
from diagrams.diagram import render_text
from diagrams.exceptions import InvariantBreach
from diagrams.maps import MapName, apply_map, enumerate_kind, source_kind
from diagrams.serializers import DiagramSerializer, load_diagram
from diagrams.tiles import DiagramKind
from harness.checks import CheckName
from harness.serializers import SweepReportSerializer
from harness.sweeps import run_sweep
from permutations.permutation import Permutation
from pipedreams.bounds import beyond_bound
from pipedreams.engine import double_grothendieck, grothendieck
from polynomials.serializers import PolynomialSerializer
from supports.construct import construct_up
from supports.serializers import CertificateSerializer


class Command(BaseCommand):
    help = "Pipe dreams, MVPDs and BVPDs of a permutation: polynomials, bijections, constructors and sweeps."

    requires_system_checks = []

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--force", action="store_true", help="Enumerate beyond PIPEDREAM_MAX_N.")

        subparsers = parser.add_subparsers(dest="subcommand", required=True)

        poly = subparsers.add_parser("poly", parents=[common], help="Grothendieck polynomial of w.")
        poly.add_argument("--w", required=True, help="One-line notation, e.g. 2,4,1,3.")
        poly.add_argument("--double", action="store_true", help="Double version in x and y.")
        poly.add_argument("--json", action="store_true")

        top = subparsers.add_parser("top", parents=[common], help="Top degree component of the polynomial.")
        top.add_argument("--w", required=True)
        top.add_argument("--json", action="store_true")

        enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="List PD(w), MVPD(w) or BVPD(w).")
        enumerate_.add_argument("--kind", required=True, choices=["pd", "mvpd", "bvpd"])
        enumerate_.add_argument("--w", required=True)
        output = enumerate_.add_mutually_exclusive_group()
        output.add_argument("--json", action="store_true")
        output.add_argument("--text", action="store_true", help="Plain renders (default).")

        map_ = subparsers.add_parser("map", parents=[common], help="Apply a bijection to a diagram file.")
        map_.add_argument("--which", required=True, choices=MapName.values)
        map_.add_argument("--w", required=True)
        map_.add_argument("--in", dest="path", required=True, metavar="FILE")
        map_.add_argument("--json", action="store_true")

        construct = subparsers.add_parser(
            "construct-up", parents=[common], help="Raise a non-top MVPD by one weighty tile."
        )
        construct.add_argument("--w", required=True)
        construct.add_argument("--in", dest="path", required=True, metavar="FILE")
        construct.add_argument("--trace", action="store_true", help="Render every intermediate diagram.")

        check = subparsers.add_parser("check", parents=[common], help="Sweep a property suite over S_n.")
        check.add_argument("--what", required=True, choices=CheckName.values)
        check.add_argument("--n", required=True, type=int)
        check.add_argument("--inverse-fireworks-only", action="store_true")

        render = subparsers.add_parser("render", parents=[common], help="Render a diagram file as text.")
        render.add_argument("--in", dest="path", required=True, metavar="FILE")
        render.add_argument("--trim", action="store_true", help="Drop trailing blank rows and columns.")

    def handle(self, *args, **options):
        handler = getattr(self, "handle_" + options["subcommand"].replace("-", "_"))
        try:
            with beyond_bound() if options["force"] else contextlib.nullcontext():
                handler(options)
        except InvariantBreach as exc:
            for witness in exc.witnesses:
                self.stderr.write(render_text(witness) + "\n")
            raise CommandError(exc.message, returncode=1)
        except (ValueError, OSError) as exc:
            raise CommandError(str(exc), returncode=2)

    def write_json(self, data):
        self.stdout.write(JSONRenderer().render(data, renderer_context={"indent": 2}).decode())

    def read_diagram(self, options, kind=None, n=None):
        return load_diagram(Path(options["path"]).read_bytes(), kind=kind, n=n)

    def handle_poly(self, options):
        w = Permutation.parse(options["w"])
        polynomial = double_grothendieck(w) if options["double"] else grothendieck(w)
        if options["json"]:
            self.write_json(
                {"w": list(w.one_line), "double": options["double"], "polynomial": PolynomialSerializer(polynomial).data}
            )
        else:
            self.stdout.write(polynomial.to_text())

    def handle_top(self, options):
        w = Permutation.parse(options["w"])
        top = top_grothendieck(w)
        if options["json"]:
            body = {"w": list(w.one_line), "method": top.method, "polynomial": PolynomialSerializer(top.polynomial).data}
            if top.notice:
                body["notice"] = top.notice
            self.write_json(body)
            return
        if top.notice:
            self.stderr.write(top.notice)
        self.stdout.write(top.polynomial.to_text())

    def handle_enumerate(self, options):
        w = Permutation.parse(options["w"])
        kind = DiagramKind(options["kind"].upper())
        diagrams = enumerate_kind(kind, w)
        if options["json"]:
            self.write_json(
                {
                    "w": list(w.one_line),
                    "kind": kind.value,
                    "count": len(diagrams),
                    "diagrams": DiagramSerializer(diagrams, many=True).data,
                }
            )
        else:
            self.stdout.write("\n\n".join(render_text(diagram) for diagram in diagrams))

    def handle_map(self, options):
        w = Permutation.parse(options["w"])
        diagram = self.read_diagram(options, kind=source_kind(options["which"]), n=w.n)
        image = apply_map(options["which"], diagram, w)
        if options["json"]:
            self.write_json(DiagramSerializer(image).data)
        else:
            self.stdout.write(render_text(image))

    def handle_construct_up(self, options):
        w = Permutation.parse(options["w"])
        certificate = construct_up(self.read_diagram(options, kind=DiagramKind.MVPD, n=w.n), w)
        self.write_json(CertificateSerializer(certificate).data)
        if options["trace"]:
            for step in certificate.steps:
                i, j = step.cell
                self.stdout.write(f"\n{step.op} ({i},{j})\n{render_text(step.diagram)}")

    def handle_check(self, options):
        report = run_sweep(
            options["what"],
            options["n"],
            inverse_fireworks_only=options["inverse_fireworks_only"],
            force=options["force"],
        )
        self.write_json(SweepReportSerializer(report).data)
        if not report.passed:
            raise CommandError(
                f"{report.what} fails on {len(report.failures)} of {report.checked} permutations", returncode=1
            )

    def handle_render(self, options):
        self.stdout.write(render_text(self.read_diagram(options), trim=options["trim"]))
