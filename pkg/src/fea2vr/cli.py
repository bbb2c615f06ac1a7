"""Command-line interface: convert, inspect, validate, serve."""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from pathlib import Path

from . import formats, geometry, listing, model, pipeline, server
from .errors import Fea2vrError

EXIT_OK = 0
EXIT_ERROR = 1  # domain errors: bad listings, empty surface, invalid mesh content
EXIT_USAGE = 2  # unreadable files, malformed flags, unparseable documents


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"fea2vr: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Fea2vrError as exc:
        print(f"fea2vr: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"fea2vr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


class _CliError(Exception):
    def __init__(self, message, exit_code=EXIT_ERROR):
        super().__init__(message)
        self.exit_code = exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fea2vr",
        description="Convert FEA solver text listings into a viewer-ready triangle mesh.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser("convert", help="convert listings to a vrmesh document")
    convert.add_argument("--nodes", required=True, help="node listing file")
    convert.add_argument("--elements", required=True, help="element listing file")
    convert.add_argument(
        "--surface-nodes",
        help="surface-node listing; when absent the full (unoptimized) mesh is built",
    )
    convert.add_argument(
        "--results",
        action="append",
        default=[],
        metavar="NAME=FILE",
        help="result listing to attach as a named field (repeatable)",
    )
    convert.add_argument(
        "--etype",
        action="append",
        default=[],
        metavar="TYP=CLASS",
        help="map a TYP value to shell/hex8/solid92 (default: 1=hex8 2=shell)",
    )
    convert.add_argument("--value-column", type=int, default=1, metavar="K")
    convert.add_argument("--dedup-faces", action="store_true")
    convert.add_argument("--drop-degenerate", action="store_true")
    convert.add_argument("--allow-empty", action="store_true")
    convert.add_argument("--fill-missing", action="store_true")
    convert.add_argument("-o", "--output", required=True, help="output vrmesh JSON path")
    convert.add_argument("--obj", help="also export OBJ")
    convert.add_argument("--report", help="also write the conversion report as JSON")
    convert.add_argument(
        "--emit-remapped-results",
        metavar="DIR",
        help="write one remapped per-node result listing per field into DIR",
    )
    convert.set_defaults(func=cmd_convert)

    inspect = sub.add_parser("inspect", help="print stats of a vrmesh file")
    inspect.add_argument("file")
    inspect.set_defaults(func=cmd_inspect)

    validate = sub.add_parser("validate", help="check a vrmesh file for defects")
    validate.add_argument("file")
    validate.set_defaults(func=cmd_validate)

    serve = sub.add_parser("serve", help="serve a vrmesh file and the viewer")
    serve.add_argument("file")
    serve.add_argument("--port", type=int, default=8377)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--assets", help="viewer asset directory (default: ./frontend/dist)")
    serve.set_defaults(func=cmd_serve)
    return parser


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_USAGE) from exc


def _parse_results_flag(values: list[str]) -> list[tuple[str, str]]:
    out = []
    for item in values:
        name, sep, path = item.partition("=")
        if not sep or not name or not path:
            raise _CliError(f"--results expects NAME=FILE, got {item!r}", EXIT_USAGE)
        out.append((name, path))
    return out


@contextlib.contextmanager
def _atomic_output(path: str):
    """Write to a temp file and rename into place; nothing partial survives."""
    target = Path(path)
    tmp = target.with_name(target.name + f".tmp{os.getpid()}")
    try:
        with open(tmp, "wb") as sink:
            yield sink
        os.replace(tmp, target)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def cmd_convert(args) -> int:
    try:
        mapping = model.parse_type_mapping(args.etype)
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_USAGE) from exc
    result_specs = _parse_results_flag(args.results)

    nodes, _ = listing.parse_node_list(_read_text(args.nodes))
    elements, _ = listing.parse_element_list(
        _read_text(args.elements), model.expected_node_counts(mapping)
    )
    surface = None
    if args.surface_nodes is not None:
        surface, _ = listing.parse_surface_node_list(_read_text(args.surface_nodes))

    options = pipeline.BuildOptions(
        dedup_faces=args.dedup_faces,
        drop_degenerate=args.drop_degenerate,
        allow_empty=args.allow_empty,
    )
    mesh, report = pipeline.build_mesh(nodes, elements, mapping, surface, options)

    for name, path in result_specs:
        if args.value_column < 1:
            raise _CliError("--value-column must be >= 1", EXIT_USAGE)
        raw, _ = listing.parse_result_list(_read_text(path), value_column=args.value_column)
        mesh.fields[name] = pipeline.remap_field(
            name, raw, mesh.node_id_map, fill_missing=args.fill_missing
        )

    geometry.validate(mesh)

    with _atomic_output(args.output) as sink:
        formats.write_vrmesh(mesh, report, sink)
    if args.obj:
        with _atomic_output(args.obj) as sink:
            formats.write_obj(mesh, sink)
    if args.report:
        with _atomic_output(args.report) as sink:
            sink.write(json.dumps(report.as_dict(), indent=2).encode("utf-8") + b"\n")
    if args.emit_remapped_results:
        out_dir = Path(args.emit_remapped_results)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, field in mesh.fields.items():
            retained = {
                int(node_id): value
                for node_id, value in zip(mesh.node_id_map.tolist(), field.values)
                if value is not None
            }
            with _atomic_output(str(out_dir / f"{name}.txt")) as sink:
                sink.write(listing.result_list_text(retained).encode("utf-8"))

    print(f"vertices: {mesh.vertex_count}")
    print(f"triangles: {mesh.triangle_count}")
    print(f"excluded nodes: {report.excluded_nodes}")
    if mesh.fields:
        print(f"fields: {', '.join(mesh.fields)}")
    print(f"wrote: {args.output}")
    return EXIT_OK


def _load_mesh(path: str):
    text = _read_text(path)
    try:
        document = formats.read_document_bytes(text.encode("utf-8"))
    except Fea2vrError as exc:
        raise _CliError(f"{path}: {exc}", EXIT_USAGE) from exc
    return document


def cmd_inspect(args) -> int:
    document = _load_mesh(args.file)
    try:
        mesh = formats.mesh_from_document(document)
    except Fea2vrError as exc:
        raise _CliError(f"{args.file}: {exc}", EXIT_USAGE) from exc
    info = geometry.stats(mesh)
    print(f"vertices: {info.vertex_count}")
    print(f"triangles: {info.triangle_count}")
    if info.bbox_min is not None:
        print(f"bbox min: {info.bbox_min}")
        print(f"bbox max: {info.bbox_max}")
    for name, values in info.fields.items():
        print(
            f"field {name}: min {values['min']} max {values['max']} mean {values['mean']}"
        )
    return EXIT_OK


def cmd_validate(args) -> int:
    document = _load_mesh(args.file)
    try:
        mesh = formats.mesh_from_document(document)
    except Fea2vrError as exc:
        # Content-level violation in a well-formed JSON file.
        print(f"issue: {exc}")
        return EXIT_ERROR
    issues = geometry.validate(mesh)
    for issue in issues:
        print(f"issue: {issue}")
    if issues:
        return EXIT_ERROR
    print("ok")
    return EXIT_OK


def cmd_serve(args) -> int:
    raw = _read_text(args.file).encode("utf-8")
    try:
        document = formats.read_document_bytes(raw)
        formats.mesh_from_document(document)
    except Fea2vrError as exc:
        raise _CliError(f"{args.file}: {exc}", EXIT_USAGE) from exc

    assets = None
    if args.assets:
        assets = Path(args.assets)
        if not assets.is_dir():
            raise _CliError(f"assets directory not found: {assets}", EXIT_USAGE)
    else:
        default_assets = Path("frontend") / "dist"
        if default_assets.is_dir():
            assets = default_assets

    try:
        httpd = server.make_server(
            raw, document.get("provenance"), assets, host=args.host, port=args.port
        )
    except OSError as exc:
        raise _CliError(f"cannot bind {args.host}:{args.port}: {exc}", EXIT_ERROR) from exc
    print(f"serving {args.file} on http://{args.host}:{httpd.server_address[1]}/")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
