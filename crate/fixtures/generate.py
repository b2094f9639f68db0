#!/usr/bin/env python3
"""Builds the bundled mini corpus and its gold labels.

    python3 fixtures/generate.py

writes fixtures/corpus/ (50 Java files in 5 projects), mines it with the
release binary and writes fixtures/gold.jsonl keyed by the mined method and
comment ids. Output is deterministic.
"""

import json
import random
import shutil
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent
CORPUS = HERE / "corpus"
PROJECTS = ["billing", "inventory", "search", "shipping", "users"]
FILES_PER_PROJECT = 10

NOUNS = ["order", "item", "price", "user", "cache", "index", "token", "stock", "route", "query",
         "account", "invoice", "buffer", "record", "session", "parcel", "entry", "result"]
VERBS = ["load", "compute", "update", "check", "build", "parse", "store", "reset", "merge", "validate"]
SUMMARY_TEMPLATES = [
    "{v} the {n} and {v2} the {n2} values",
    "{v} every {n} before we {v2} the {n2}",
    "first {v} the current {n} then {v2} it",
    "{v} the {n} list for the given {n2}",
    "make sure we {v} each {n} in the {n2}",
]
OTHER = [
    (["todo"], "TODO handle the {n} overflow case later"),
    (["rationale"], "needed because the {n} may be shared across threads"),
    (["commented_code"], "{n}.{v}();"),
    (["pointer"], "see {N}Service for the details"),
    (["exception"], "the {n} can be null here"),
]


def camel(*words):
    return words[0] + "".join(w.title() for w in words[1:])


def statement(rng, v, n):
    kind = rng.randrange(4)
    if kind == 0:
        return f"{camel(n, 'count')} += {camel(v, n)}({n}s.size());"
    if kind == 1:
        return f"{n}s.{v}({rng.choice(NOUNS)});"
    if kind == 2:
        return f"int {camel(n, 'size', str(rng.randrange(100)))} = {n}s.size() * {rng.randrange(2, 9)};"
    return f"log.debug(\"{v} {n}\");"


class Method:
    def __init__(self, name, is_test=False):
        self.name = name
        self.is_test = is_test
        self.lines = []   # (text, label or None)
        self.labels = []  # (comment line index, categories, linked line indexes)


def build_method(rng, name, blocks):
    m = Method(name)
    for _ in range(rng.randint(1, 4)):
        v, v2 = rng.sample(VERBS, 2)
        n, n2 = rng.sample(NOUNS, 2)
        if blocks and rng.random() < 0.08:
            # Same documented code under a different comment elsewhere.
            text = rng.choice(SUMMARY_TEMPLATES).format(v=v, n=n, v2=v2, n2=n2)
            at = len(m.lines)
            m.lines.append(("// " + text, None))
            linked = []
            for s in rng.choice(blocks):
                linked.append(len(m.lines))
                m.lines.append((s, None))
            m.labels.append((at, ["summary"], linked))
        elif rng.random() < 0.65:
            text = rng.choice(SUMMARY_TEMPLATES).format(v=v, n=n, v2=v2, n2=n2)
            at = len(m.lines)
            m.lines.append(("// " + text, None))
            linked = []
            for _ in range(rng.randint(1, 3)):
                linked.append(len(m.lines))
                m.lines.append((statement(rng, v, n), None))
            style = rng.random()
            if style < 0.15:
                # An inner blank line: the documented block continues past it.
                m.lines.append(("", None))
                linked.append(len(m.lines))
                m.lines.append((statement(rng, v2, n2), None))
            elif style < 0.3:
                # Scope ends before the blank line.
                m.lines.append((statement(rng, v2, n2), None))
            else:
                blocks.append([m.lines[i][0] for i in linked])
            m.labels.append((at, ["summary"], linked))
        else:
            cats, tmpl = rng.choice(OTHER)
            at = len(m.lines)
            m.lines.append(("// " + tmpl.format(n=n, v=v, N=n.title()), None))
            m.lines.append((statement(rng, v, n), None))
            m.labels.append((at, cats, []))
        m.lines.append(("", None))
    while m.lines and m.lines[-1][0] == "":
        m.lines.pop()
    return m


def render_file(rng, project, idx, blocks):
    cls = f"{project.title()}{camel(*rng.sample(NOUNS, 2)).title()}{idx}"
    out = [f"package com.example.{project};", "", "import java.util.List;", "",
           f"public class {cls} {{", ""]
    labels = []
    n_methods = rng.randint(1, 3)
    for k in range(n_methods):
        name = camel(rng.choice(VERBS), rng.choice(NOUNS), str(idx), str(k))
        m = build_method(rng, name, blocks)
        out.append(f"    public void {name}(List<String> {rng.choice(NOUNS)}s) {{")
        base = len(out) + 1  # file line of method body line 0
        for text, _ in m.lines:
            out.append(("        " + text) if text else "")
        out.append("    }")
        out.append("")
        for at, cats, linked in m.labels:
            labels.append({"comment_line": base + at, "categories": cats,
                           "links": [base + x for x in linked]})
    if idx % 5 == 0:
        out.append("    @Test")
        out.append(f"    public void test{cls}() {{")
        out.append("        // check that the setup works as expected")
        out.append("        assertTrue(true);")
        out.append("    }")
        out.append("")
    out.append("}")
    return f"{cls}.java", "\n".join(out) + "\n", labels


def write_corpus():
    rng = random.Random(20240611)
    if CORPUS.exists():
        shutil.rmtree(CORPUS)
    labels = {}
    blocks = []
    for project in PROJECTS:
        pdir = CORPUS / project / "src"
        pdir.mkdir(parents=True)
        for i in range(FILES_PER_PROJECT):
            name, text, ls = render_file(rng, project, i, blocks)
            (pdir / name).write_text(text)
            labels[f"{project}/src/{name}"] = ls
    return labels


def mine(manifest):
    subprocess.run(["cargo", "build", "--release", "-q", "-p", "codescope-cli"], cwd=ROOT, check=True)
    exe = ROOT / "target" / "release" / "codescope"
    subprocess.run([str(exe), "mine", "--root", str(CORPUS), "--out", str(manifest)], check=True)


def gold_records(labels, manifest):
    lines = manifest.read_text().splitlines()
    records = [json.loads(l) for l in lines[1:]]
    out = []
    for path in sorted(labels):
        methods = sorted((r for r in records if r["path"] == path), key=lambda r: r["file_line"])
        for lab in labels[path]:
            owner = [r for r in methods if r["file_line"] <= lab["comment_line"]]
            if not owner:
                continue
            r = owner[-1]
            rel = lab["comment_line"] - r["file_line"] + 1
            comment = next((c for c in r["comments"] if c["start_line"] == rel), None)
            if comment is None:
                continue
            out.append({
                "task_id": f"G{len(out) + 1:06}",
                "method_id": r["method_id"],
                "comment_id": comment["id"],
                "path": path,
                "categories": sorted(lab["categories"]),
                "links": [x - r["file_line"] + 1 for x in lab["links"]],
            })
    return out


def main():
    labels = write_corpus()
    manifest = HERE / "manifest.jsonl"
    mine(manifest)
    gold = gold_records(labels, manifest)
    with open(HERE / "gold.jsonl", "w") as f:
        f.write(json.dumps({"schema": "codescope.gold", "version": 1}) + "\n")
        for g in gold:
            f.write(json.dumps(g) + "\n")
    manifest.unlink()
    print(f"{sum(len(v) for v in labels.values())} labeled comments, {len(gold)} gold records", file=sys.stderr)


if __name__ == "__main__":
    main()
