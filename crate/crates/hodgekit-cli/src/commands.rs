//! One function per subcommand: compute, then render as text and JSON.

use std::fmt::Write as _;

use serde_json::{json, Value};

use hodgekit::abelian::{
    brute_force_max_commutative, build_abelian_from_path, gpp_abelian_grouping, max_abelian_dimension,
    relaxed_path_max, HodgePath, BRUTE_FORCE_GUARD,
};
use hodgekit::basepoint::{build_partition, IndexPartition};
use hodgekit::blocks::{graded_piece, render_grid, roots_at_level, GradedPiece};
use hodgekit::hodge::{describe as describe_domain, HodgeNumbers, PeriodDomainDescriptor};
use hodgekit::matrixrep::span_is_abelian;
use hodgekit::roots::{is_commutative, Root, RootSystem};
use hodgekit::triples::{
    check_bracket, enumerate_triples, grassmannian_descriptor, hodge_bracket, parse_triple, HodgeTriple,
};
use hodgekit::verify::{verify_sweep, CheckKind};
use hodgekit::{HodgeError, Result};

use crate::Report;

fn roots_json(roots: &[Root]) -> Value {
    Value::from(roots.iter().map(|r| r.to_string()).collect::<Vec<_>>())
}

fn roots_text(roots: &[Root]) -> String {
    if roots.is_empty() {
        return "∅".into();
    }
    roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
}

fn span_text(indices: &[usize]) -> String {
    let v: Vec<String> = indices.iter().map(|i| format!("e{i}")).collect();
    format!("<{}>", v.join(","))
}

fn seq_text(v: &[u32]) -> String {
    let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

fn domain_json(d: &PeriodDomainDescriptor) -> Value {
    json!({
        "weight": d.weight,
        "hodge_numbers": d.hodge.h(),
        "key": d.key(),
    })
}

fn ok(command: &'static str, text: String, json: Value) -> Result<Report> {
    Ok(Report {
        command,
        text,
        json,
        status: 0,
    })
}

pub fn describe(hn: &HodgeNumbers) -> Result<Report> {
    let d = describe_domain(hn)?;
    let signs: String = d.signature_sequence.iter().map(|s| s.as_char()).collect();
    let dims = d.display_sequence();
    let mut t = String::new();
    writeln!(t, "hodge numbers       {hn}").unwrap();
    writeln!(t, "group               {}", d.complex_group()).unwrap();
    writeln!(t, "root system         {}{}", d.group_type, d.rank).unwrap();
    writeln!(t, "real form           {}", d.real_form).unwrap();
    writeln!(t, "m                   {}", d.m).unwrap();
    writeln!(t, "dimension sequence  {}", seq_text(&dims)).unwrap();
    writeln!(t, "signature sequence  {signs}").unwrap();
    writeln!(t, "dim V               {}", d.dim_v).unwrap();
    writeln!(t, "dim g               {}", d.dim_g()).unwrap();
    let json = json!({
        "domain": domain_json(&d),
        "group": d.complex_group(),
        "group_type": d.group_type.to_string(),
        "rank": d.rank,
        "real_form": d.real_form.to_string(),
        "m": d.m,
        "f": d.f,
        "dimension_sequence": dims,
        "dimension_sequence_with_gaps": d.dimension_sequence,
        "signature_sequence": signs,
        "dim_v": d.dim_v,
        "dim_g": d.dim_g(),
    });
    ok("describe", t, json)
}

fn partition(hn: &HodgeNumbers) -> Result<IndexPartition> {
    Ok(build_partition(&describe_domain(hn)?))
}

pub fn base_point(hn: &HodgeNumbers) -> Result<Report> {
    let p = partition(hn)?;
    let n = p.weight();
    let mut t = String::new();
    let mut spans = Vec::new();
    writeln!(t, "{hn}  {}", p.descriptor.complex_group()).unwrap();
    for k in 0..=n {
        let span = p.span_of(k)?;
        writeln!(t, "V^{{{},{}}} = {}", n - k, k, span_text(&span)).unwrap();
        spans.push(json!({"p": n - k, "q": k, "span": span}));
    }
    let j1: Vec<String> = p.j1.iter().map(|x| x.to_string()).collect();
    let j2: Vec<String> = p.j2.iter().map(|x| x.to_string()).collect();
    writeln!(t, "J1 = {{{}}}  J2 = {{{}}}", j1.join(","), j2.join(",")).unwrap();
    let parts: Vec<Value> = p
        .parts
        .iter()
        .map(|(name, idx)| json!({"name": name.to_string(), "indices": idx}))
        .collect();
    for (name, idx) in &p.parts {
        writeln!(t, "  {name:<4} {}", span_text(idx)).unwrap();
    }
    let json = json!({
        "domain": domain_json(&p.descriptor),
        "spans": spans,
        "j1": p.j1,
        "j2": p.j2,
        "offset": p.offset,
        "parts": parts,
    });
    ok("base-point", t, json)
}

fn piece_json(piece: &GradedPiece) -> Value {
    let blocks: Vec<Value> = piece
        .blocks
        .iter()
        .map(|b| {
            json!({
                "name": b.name,
                "kind": b.kind.prefix(),
                "rows": b.rows,
                "cols": b.cols,
                "independent": b.independent,
                "parity": b.parity.to_string(),
            })
        })
        .collect();
    json!({"p": piece.level, "dim": piece.dim, "blocks": blocks, "names": piece.names()})
}

fn piece_line(piece: &GradedPiece) -> String {
    let n = piece.level;
    let names = if piece.blocks.is_empty() {
        "0".to_string()
    } else {
        piece.names().join(" ⊕ ")
    };
    format!("g^{{{},{}}} = {names}  (dim {})", -n, n, piece.dim)
}

pub fn blocks(hn: &HodgeNumbers, level: Option<i64>, grid: bool, color: bool) -> Result<Report> {
    let p = partition(hn)?;
    let n = p.weight() as i64;
    let levels: Vec<i64> = match level {
        Some(l) if l.abs() > n => {
            return Err(HodgeError::InvalidInput(format!("level {l} outside −{n}..={n}")))
        }
        Some(l) => vec![l],
        None => (-n..=n).rev().collect(),
    };
    let mut t = String::new();
    writeln!(t, "{hn}  {}", p.descriptor.complex_group()).unwrap();
    let mut pieces = Vec::new();
    for l in levels {
        let piece = graded_piece(&p, l);
        writeln!(t, "{}", piece_line(&piece)).unwrap();
        if level.is_some() {
            for b in &piece.blocks {
                writeln!(
                    t,
                    "  {:<6} rows {:?} cols {:?} independent {}",
                    b.name, b.rows, b.cols, b.independent
                )
                .unwrap();
            }
        }
        pieces.push(piece_json(&piece));
    }
    let mut json = json!({"domain": domain_json(&p.descriptor), "pieces": pieces});
    if grid {
        t.push('\n');
        t.push_str(&render_grid(&p, color));
        json["grid"] = Value::from(render_grid(&p, false));
    }
    ok("blocks", t, json)
}

fn triple_json(p: &IndexPartition, t: &HodgeTriple) -> Value {
    let g = grassmannian_descriptor(p, t);
    json!({
        "name": t.name,
        "flavor": format!("{:?}", t.flavor),
        "level": t.level,
        "labels": [t.labels.0, t.labels.1],
        "negative_block": {"name": t.negative_block.name, "rows": t.negative_block.rows, "cols": t.negative_block.cols},
        "positive_block": {"name": t.positive_block.name, "rows": t.positive_block.rows, "cols": t.positive_block.cols},
        "semisimple": t.semisimple,
        "embedding": t.embedding.to_string(),
        "roots_neg": roots_json(&t.roots_neg),
        "roots_pos": roots_json(&t.roots_pos),
        "roots_short": roots_json(&t.roots_short),
        "grassmannian": {"compact_dual": g.compact_dual, "real_form": g.real_form, "dim": g.dim},
    })
}

fn triple_line(p: &IndexPartition, t: &HodgeTriple) -> String {
    let g = grassmannian_descriptor(p, t);
    format!(
        "{:<10} {:<7} [{}, ({}), {}]  {}  {}  dim {}",
        t.name,
        t.embedding.to_string(),
        t.negative_block.name,
        t.semisimple.join(", "),
        t.positive_block.name,
        g.compact_dual,
        g.real_form,
        g.dim
    )
}

pub fn triples(hn: &HodgeNumbers, level: i64) -> Result<Report> {
    let p = partition(hn)?;
    let set = enumerate_triples(&p, level)?;
    let mut t = String::new();
    writeln!(t, "{hn}  level {level}: triples {}", set.triples.len()).unwrap();
    for x in &set.triples {
        writeln!(t, "{}", triple_line(&p, x)).unwrap();
        let neg: Vec<Root> = x.roots_neg.iter().chain(&x.roots_short).cloned().collect();
        writeln!(t, "           roots {}", roots_text(&neg)).unwrap();
    }
    for r in &set.rejected {
        writeln!(t, "rejected   {:<7} {}: {}", r.embedding.to_string(), r.name, r.reason).unwrap();
    }
    let rejected: Vec<Value> = set
        .rejected
        .iter()
        .map(|r| json!({"name": r.name, "embedding": r.embedding.to_string(), "reason": r.reason}))
        .collect();
    let json = json!({
        "domain": domain_json(&p.descriptor),
        "p": level,
        "triples": set.triples.iter().map(|x| triple_json(&p, x)).collect::<Vec<_>>(),
        "rejected": rejected,
    });
    ok("triples", t, json)
}

pub fn bracket(hn: &HodgeNumbers, a: &str, b: &str) -> Result<Report> {
    let p = partition(hn)?;
    let t1 = parse_triple(&p, a)?;
    let t2 = parse_triple(&p, b)?;
    let r = hodge_bracket(&p, &t1, &t2)?;
    let chk = check_bracket(&p, &t1, &t2, &r)?;
    let mut t = String::new();
    let rhs = if r.terms.is_empty() {
        "0".to_string()
    } else {
        r.terms
            .iter()
            .map(|x| format!("{} ({})", x.result.name, x.clause))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    writeln!(t, "[{}, {}] = {rhs}", t1.name, t2.name).unwrap();
    if let Some(note) = &r.note {
        writeln!(t, "note: {note}").unwrap();
    }
    writeln!(
        t,
        "oracle: commutator rank {}, predicted rank {}, spans equal: {}, each clause alone: {}, inside g^{{0,0}}: {}",
        chk.commutator_rank, chk.predicted_rank, chk.sum_matches, chk.each_clause_matches, chk.in_levi
    )
    .unwrap();
    let terms: Vec<Value> = r
        .terms
        .iter()
        .map(|x| json!({"clause": x.clause.to_string(), "result": triple_json(&p, &x.result)}))
        .collect();
    let json = json!({
        "domain": domain_json(&p.descriptor),
        "t1": t1.name,
        "t2": t2.name,
        "terms": terms,
        "note": r.note,
        "oracle": {
            "commutator_rank": chk.commutator_rank,
            "predicted_rank": chk.predicted_rank,
            "sum_matches": chk.sum_matches,
            "each_clause_matches": chk.each_clause_matches,
            "in_levi": chk.in_levi,
        },
    });
    ok("bracket", t, json)
}

pub fn abelian(hn: &HodgeNumbers, js: &[usize], a_cols: Option<usize>, y: Option<usize>) -> Result<Report> {
    let p = partition(hn)?;
    let path = HodgePath::from_sequence(&p, js, a_cols, y)?;
    let a = build_abelian_from_path(&p, &path)?;
    let sys = RootSystem::degenerate_ok(p.group_type(), p.rank());
    let commutative = is_commutative(&a.roots, &sys)?;
    let matrix = span_is_abelian(&a.roots, &p)?;
    let seq: Vec<String> = path.sequence.iter().map(|x| x.to_string()).collect();
    let mut t = String::new();
    writeln!(t, "{hn}  Hodge sequence ({})", seq.join(",")).unwrap();
    for b in &a.blocks {
        writeln!(t, "  {:<6} rows {:?} cols {:?}  dim {}", b.name, b.rows, b.cols, b.dim).unwrap();
    }
    writeln!(t, "roots {}", roots_text(&a.roots)).unwrap();
    writeln!(t, "dim {}  commutative {commutative}  matrix-abelian {matrix}", a.dim).unwrap();
    let blocks: Vec<Value> = a
        .blocks
        .iter()
        .map(|b| json!({"name": b.name, "rows": b.rows, "cols": b.cols, "dim": b.dim}))
        .collect();
    let json = json!({
        "domain": domain_json(&p.descriptor),
        "sequence": path.sequence,
        "y_root": path.y_root,
        "blocks": blocks,
        "roots": roots_json(&a.roots),
        "dim": a.dim,
        "commutative": commutative,
        "matrix_abelian": matrix,
    });
    ok("abelian", t, json)
}

pub fn grouping(hn: &HodgeNumbers, level: i64) -> Result<Report> {
    let p = partition(hn)?;
    let g = gpp_abelian_grouping(&p, level)?;
    let mut t = String::new();
    writeln!(t, "{hn}  g^{{{},{}}}  m = {}", -level, level, g.m).unwrap();
    if let (Some(k), Some(r)) = (g.k, g.r) {
        writeln!(t, "m = {k}·{level} + {r}").unwrap();
    }
    for c in &g.chains {
        let pairs: Vec<String> = c.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        writeln!(t, "  {:<4} {}  blocks {}", c.name, pairs.join(" "), c.blocks.join(" ")).unwrap();
    }
    for s in &g.straddle {
        writeln!(t, "  other {:<6} commutative {}", s.name, s.commutative).unwrap();
    }
    for f in &g.flagged {
        writeln!(t, "  flagged {} {} with {}", f.chain, f.chain_block, f.block).unwrap();
    }
    writeln!(t, "{}", g.note).unwrap();
    let json = json!({
        "domain": domain_json(&p.descriptor),
        "p": level,
        "m": g.m,
        "k": g.k,
        "r": g.r,
        "chains": g.chains.iter().map(|c| json!({"name": c.name, "pairs": c.pairs, "blocks": c.blocks})).collect::<Vec<_>>(),
        "other_blocks": g.straddle.iter().map(|s| json!({"name": s.name, "commutative": s.commutative})).collect::<Vec<_>>(),
        "flagged": g.flagged.iter().map(|f| json!({"chain": f.chain, "chain_block": f.chain_block, "block": f.block})).collect::<Vec<_>>(),
        "note": g.note,
    });
    ok("abelian", t, json)
}

pub fn max_abelian(hn: &HodgeNumbers, require_oracle: bool) -> Result<Report> {
    let d = describe_domain(hn)?;
    let p = build_partition(&d);
    let mx = max_abelian_dimension(&d)?;
    let relaxed = relaxed_path_max(&p);
    let size = roots_at_level(&p, 1).len();
    let brute = match brute_force_max_commutative(&p) {
        Ok(b) => Some(b),
        Err(e @ HodgeError::GuardExceeded { .. }) if require_oracle => return Err(e),
        Err(HodgeError::GuardExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let seq: Vec<String> = mx.argmax.iter().map(|x| x.to_string()).collect();
    let mut t = String::new();
    writeln!(t, "{hn}  dim g^{{-1,1}} = {size}").unwrap();
    writeln!(t, "path maximum        {}  at ({})", mx.value, seq.join(",")).unwrap();
    match &mx.formula {
        Some(f) => writeln!(
            t,
            "dimension function  {}  at {:?}  agrees {}",
            f.value, f.argmax, mx.formula_agrees
        )
        .unwrap(),
        None => writeln!(t, "dimension function  n/a (m = 0)").unwrap(),
    }
    writeln!(t, "relaxed terminal    {relaxed}").unwrap();
    match &brute {
        Some(b) => writeln!(t, "exhaustive oracle   {}  witness {}", b.max, roots_text(&b.witness)).unwrap(),
        None => writeln!(t, "exhaustive oracle   skipped ({size} roots > guard {BRUTE_FORCE_GUARD})").unwrap(),
    }
    let json = json!({
        "domain": domain_json(&d),
        "dim_g11": size,
        "path_max": mx.value,
        "argmax": mx.argmax,
        "formula": mx.formula.as_ref().map(|f| json!({"value": f.value, "argmax": f.argmax})),
        "formula_agrees": mx.formula_agrees,
        "relaxed_max": relaxed,
        "oracle": brute.as_ref().map(|b| json!({"max": b.max, "witness": roots_json(&b.witness)})),
    });
    ok("max-abelian", t, json)
}

pub fn verify(max_weight: usize, max_h: u32, strict: bool, color: bool) -> Report {
    let r = verify_sweep(max_weight, max_h);
    let paint = |ok: bool, s: &str| -> String {
        match (color, ok) {
            (false, _) => s.to_string(),
            (true, true) => format!("\x1b[32m{s}\x1b[0m"),
            (true, false) => format!("\x1b[31m{s}\x1b[0m"),
        }
    };
    let mut t = String::new();
    writeln!(t, "sweep: weight ≤ {max_weight}, h ≤ {max_h}: {} descriptors", r.descriptors).unwrap();
    for c in &r.checks {
        let kind = match c.kind {
            CheckKind::Invariant => "invariant",
            CheckKind::Finding => "finding",
        };
        let status = if c.ok() { "PASS" } else { "FAIL" };
        writeln!(
            t,
            "{} {:<18} {:<9} {:>6} passed {:>5} failed  {}",
            paint(c.ok(), status),
            c.check,
            kind,
            c.passed,
            c.failed,
            c.title
        )
        .unwrap();
        for s in &c.samples {
            writeln!(t, "       {s}").unwrap();
        }
    }
    let pass = if strict { r.all_hold() } else { r.invariants_hold() };
    writeln!(t, "{}", if pass { "verify: ok" } else { "verify: FAILED" }).unwrap();
    let json = json!({
        "max_weight": max_weight,
        "max_h": max_h,
        "descriptors": r.descriptors,
        "strict": strict,
        "pass": pass,
        "checks": serde_json::to_value(&r.checks).expect("report serializes"),
    });
    Report {
        command: "verify",
        text: t,
        json,
        status: if pass { 0 } else { 2 },
    }
}
