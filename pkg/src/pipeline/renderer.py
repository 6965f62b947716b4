# -*- coding: utf-8 -*-
import json
import pathlib
import sys

from jinja2 import Environment, FileSystemLoader, select_autoescape

from ..config_loader import TEMPLATES


def _env():
    return Environment(loader=FileSystemLoader(str(TEMPLATES)),
                       autoescape=select_autoescape(),
                       trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)


def render(template, **ctx):
    return _env().get_template(template).render(**ctx)


def dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _set(xs):
    return "{" + ",".join(str(i) for i in sorted(xs)) + "}"


def datum_label(D, dim=None):
    label = f"I+={_set(D.Iplus)} I-={_set(D.Iminus)} |N|={D.N.order} Gamma={D.Gamma}"
    return label + (f" dim={dim}" if dim is not None else "")


def render_hasse_dot(diagram, dims=None):
    nodes = []
    for k, c in enumerate(diagram.classes):
        D = diagram.family[c["rep"]]
        nodes.append({"id": k, "label": datum_label(D, dims[k] if dims else None),
                      "size": len(c["members"])})
    return render("hasse.dot.j2", nodes=nodes, edges=diagram.edges)


def render_census_text(report):
    return render("census.md.j2", report=report)


def write_output(text, path=None):
    if path is None:
        sys.stdout.write(text)
        return
    p = pathlib.Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")
