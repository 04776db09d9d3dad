#!/usr/bin/env python3
"""Independent spreadsheet-style computation of the completeness tables.

Reads a dataset (JSON or CSV), an alignment CSV and an exclusions list, and
writes the golden completeness, gap, summary-table, overlap, selection and
curation CSVs. Shares no code with the C++ implementation; rules are
re-derived from their plain-language statement:

  * classification: Maps when no facet is a gap; Partially Maps when
    equipmentClass and pointClass are mapped and exactly one gap remains;
    otherwise Does Not Map. Absent facet values are not applicable.
  * a curated modifier gap whose words occur in a point name turns a mapped
    pointClass into a gap and adds a concept gap.
  * gap counts are distinct point types per (type, concept, label);
    significant when count / set size >= 2 %.

Usage: gap_oracle.py DATASET ALIGNMENT EXCLUSIONS OUT_DIR [SYSTEMS...]
"""
import csv
import io
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

TABLE_SYSTEMS = ["AHU", "Chiller", "Boiler", "Loop", "TerminalUnit"]
LABEL = {"AHU": "AHU", "Chiller": "Chiller", "Boiler": "Boiler", "Loop": "Loop",
         "TerminalUnit": "Terminal Units", "Other": "Other"}
FACETS = ["equipmentClass", "pointClass", "equipmentType", "measurementControlType", "service"]
FACET_ORDER = FACETS + ["modifier"]
GAP_TYPE = {"equipmentClass": "equipment", "equipmentType": "equipment", "pointClass": "measure",
            "service": "medium", "measurementControlType": "concept", "modifier": "concept"}
TYPE_ORDER = ["concept", "equipment", "measure", "medium"]
ONTOLOGIES = ["haystack", "brick"]

WORD = re.compile(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+|[A-Z]+|[0-9]+|[^A-Za-z0-9 _\-\t]")


def words(name):
    return WORD.findall(name)


def pct(num, den):
    f = Fraction(100 * num, den)
    return int(f + Fraction(1, 2)) if f.denominator != 1 else int(f)


def to_csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def load_points(path):
    text = Path(path).read_text()
    if path.endswith(".json"):
        raw = json.loads(text)["points"]
    else:
        raw = list(csv.DictReader(io.StringIO(text)))
    pts = []
    for r in raw:
        mct = (r.get("mct") or "none").strip()
        mct = {"ai": "AI", "ao": "AO", "di": "DI", "do": "DO", "none": "none", "": "none"}[mct.lower()]
        pts.append({
            "name": r["name"], "system": r["system"],
            "equipmentClass": r["equipment_class"],
            "equipmentType": r.get("equipment_type") or None,
            "pointClass": r["point_class"],
            "measurementControlType": mct,
            "service": r.get("service") or None,
        })
    return pts


def select(points, systems, excluded):
    cand = sorted((p for p in points if p["system"] in systems), key=lambda p: p["name"])
    selected, rejected, first, covered = [], [], {}, {}
    for p in cand:
        if p["name"] in excluded:
            rejected.append((p, "excluded"))
            continue
        key = tuple(p[f] for f in ("equipmentClass", "equipmentType", "pointClass",
                                   "measurementControlType", "service"))
        if key in first:
            rejected.append((p, "duplicate of " + first[key]))
            continue
        first[key] = p["name"]
        ws = {w.lower() for w in words(p["name"])}
        seen = covered.setdefault(p["system"], set())
        if ws <= seen:
            rejected.append((p, "no unique word"))
            continue
        seen |= ws
        selected.append(p)
    return selected, rejected


def classify(p, table, ont, todo):
    status, concept = {}, {}
    for f in FACETS:
        v = p[f]
        if v is None:
            status[f] = "na"
            continue
        e = table.get((v.lower(), f, ont))
        if e is None:
            todo.setdefault((ont, f, v), set()).add(p["name"])
            status[f], concept[f] = "gap", v
        elif e == "":
            status[f], concept[f] = "gap", v
        else:
            status[f] = "ok"
    pw = [w.lower() for w in words(p["name"])]
    extra = []
    pc_from_modifier = None
    for (tok, facet, o), target in table.items():
        if facet != "modifier" or o != ont or target != "":
            continue
        mw = [w.lower() for w in words(table_tokens[(tok, facet, o)])]
        hit = any(pw[i:i + len(mw)] == mw for i in range(len(pw) - len(mw) + 1))
        if not hit:
            continue
        name = table_tokens[(tok, facet, o)]
        if status["pointClass"] == "ok":
            status["pointClass"], concept["pointClass"] = "gap", name
            pc_from_modifier = name
        extra.append(("concept", name))
    gaps = [f for f in FACETS if status[f] == "gap"]
    if not gaps:
        label = "Maps"
    elif status["equipmentClass"] == "ok" and status["pointClass"] == "ok" and len(gaps) == 1:
        label = "Partially Maps"
    else:
        label = "Does Not Map"
    out = []
    for f in gaps:
        if f == "pointClass" and pc_from_modifier is not None and concept[f] == pc_from_modifier:
            continue
        out.append((GAP_TYPE[f], concept[f]))
    return label, out + extra


table_tokens = {}


def main():
    dataset, alignment, exclusions, out_dir = sys.argv[1:5]
    systems = sys.argv[5:] or TABLE_SYSTEMS
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    points = load_points(dataset)
    excluded = set()
    for line in Path(exclusions).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            excluded.add(line)
    table = {}
    modifier_order = []
    for r in csv.DictReader(io.StringIO(Path(alignment).read_text())):
        key = (r["token"].strip().lower(), r["facet"], r["ontology"])
        table[key] = r["target"].strip()
        table_tokens[key] = r["token"].strip()
    selected, rejected = select(points, set(systems), excluded)
    n = len(selected)

    rows_by_ont, gaps_by_ont, todo = {}, {}, {}
    for ont in ONTOLOGIES:
        results = [(p, *classify(p, table, ont, todo)) for p in selected]
        order = [s for s in TABLE_SYSTEMS if s in systems] + (["Other"] if "Other" in systems else [])
        rows = []
        for s in order + ["Total"]:
            rs = [r for r in results if s == "Total" or r[0]["system"] == s]
            m = sum(1 for r in rs if r[1] == "Maps")
            pm = sum(1 for r in rs if r[1] == "Partially Maps")
            d = len(rs) - m - pm
            rows.append([LABEL.get(s, s), pct(m, len(rs)) if rs else 0,
                         pct(m + pm, len(rs)) if rs else 0, len(rs), m, pm, d])
        rows_by_ont[ont] = rows
        agg = {}
        for p, label, gaps in results:
            for t, c in gaps:
                agg.setdefault((t, c, label), set()).add(p["name"])
        recs = []
        for (t, c, label), names in agg.items():
            sig = Fraction(len(names), n) >= Fraction(2, 100)
            recs.append((t, sig, label, c, len(names)))
        recs.sort(key=lambda r: (TYPE_ORDER.index(r[0]), not r[1], r[2] != "Does Not Map", r[4], r[3].encode()))
        gaps_by_ont[ont] = recs
        (out / f"completeness_{ont}.csv").write_text(to_csv(
            [["system", "pct_maps", "pct_maps_or_partial"]] + [r[:3] for r in rows]))
        (out / f"counts_{ont}.csv").write_text(to_csv(
            [["system", "total", "maps", "partially_maps", "does_not_map"]] + [[r[0]] + r[3:] for r in rows]))
        (out / f"gaps_{ont}.csv").write_text(to_csv(
            [["gap_type", "significant", "classification", "concept", "count"]] +
            [[t, "Yes" if s else "No", l, c, k] for t, s, l, c, k in recs]))

    t1 = [["system", "haystack_pct_maps", "haystack_pct_maps_or_partial", "brick_pct_maps", "brick_pct_maps_or_partial"]]
    for h, b in zip(rows_by_ont["haystack"], rows_by_ont["brick"]):
        t1.append([h[0], h[1], h[2], b[1], b[2]])
    (out / "table1.csv").write_text(to_csv(t1))

    ov = {}
    for ont in ONTOLOGIES:
        for t, sig, label, c, k in gaps_by_ont[ont]:
            if label != "Does Not Map":
                continue
            e = ov.setdefault((t, c), {"haystack": (0, False), "brick": (0, False)})
            e[ont] = (k, sig)
    orows = []
    for (t, c), e in ov.items():
        hs, bs = e["haystack"][1], e["brick"][1]
        if not (hs or bs):
            continue
        presence = "both" if hs and bs else "haystack" if hs else "brick"
        orows.append([t, c, e["haystack"][0], e["brick"][0], presence])
    rank = {"both": 0, "haystack": 1, "brick": 2}
    orows.sort(key=lambda r: (TYPE_ORDER.index(r[0]), rank[r[4]], r[1].encode()))
    (out / "overlap.csv").write_text(to_csv([["gap_type", "concept", "haystack_count", "brick_count", "presence"]] + orows))

    sel = [[p["name"], p["system"], "selected", ""] for p in selected] + \
          [[p["name"], p["system"], "rejected", why] for p, why in rejected]
    sel.sort(key=lambda r: r[0].encode())
    (out / "selection.csv").write_text(to_csv([["name", "system", "status", "reason"]] + sel))

    trows = sorted(todo.items(), key=lambda kv: (ONTOLOGIES.index(kv[0][0]), FACET_ORDER.index(kv[0][1]), kv[0][2].encode()))
    (out / "curation_todo.csv").write_text(to_csv(
        [["ontology", "facet", "token", "points"]] + [[o, f, t, len(ps)] for (o, f, t), ps in trows]))


if __name__ == "__main__":
    main()
