//! JSON views of core results. Big integers are decimal strings,
//! polynomials are `{"coeffs": [...]}` lowest degree first, permutations are
//! 1-based cycle strings.

use minram::constructions::{
    BmsTriple, FfieldInstance, FruchtRecipe, KPolynomial, LSource, RealizationCertificate, SchinzelInstance,
};
use minram::constructions::ffield::EVIDENCE_NOTE;
use minram::exact::IntPoly;
use minram::galois::{GaloisCertificate, Irreducibility, RamificationReport, CLOSURE_NOTE};
use minram::permgroup::{AbstractGroup, NqHit, Perm};
use serde::Serialize;
use serde_json::{json, Value};

fn lower<T: Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("enum serializes")
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn poly(p: &IntPoly) -> Value {
    json!({ "coeffs": strs(p.coeffs()) })
}

pub fn perms(ps: &[Perm]) -> Vec<String> {
    ps.iter().map(Perm::to_cycle_string).collect()
}

pub fn table(g: &AbstractGroup) -> Value {
    json!({ "order": g.order(), "rows": g.rows() })
}

pub fn irreducibility(i: &Irreducibility) -> Value {
    match i {
        Irreducibility::Irreducible(c) => json!({
            "irreducible": true,
            "method": lower(c.method),
            "prime": c.prime,
            "pattern": c.pattern,
        }),
        Irreducibility::Reducible(f) => json!({
            "irreducible": false,
            "content": f.content.to_string(),
            "factors": f.factors.iter().map(|(g, m)| json!({ "coeffs": strs(g.coeffs()), "multiplicity": m })).collect::<Vec<_>>(),
        }),
    }
}

pub fn galois(c: &GaloisCertificate) -> Value {
    json!({
        "degree": c.degree,
        "status": lower(c.status),
        "disc": c.disc.to_string(),
        "disc_square": c.disc_square,
        "prime_degree": c.prime_degree,
        "primes_scanned": c.primes_scanned,
        "witnesses": c.witnesses.iter().map(|w| json!({
            "role": lower(w.role),
            "prime": w.prime.to_string(),
            "cycle_type": w.cycle_type,
        })).collect::<Vec<_>>(),
        "observed": c.observed.iter().map(|(ct, p)| json!({ "cycle_type": ct, "prime": p.to_string() })).collect::<Vec<_>>(),
        "irreducibility": irreducibility(&c.irreducibility),
    })
}

pub fn ramification(r: &RamificationReport) -> Value {
    json!({
        "degree": r.degree,
        "disc": r.disc.to_string(),
        "places": r.places.iter().map(|pl| json!({
            "prime": pl.prime.to_string(),
            "primality": lower(pl.primality),
            "disc_valuation": pl.disc_valuation,
            "status": lower(pl.status),
            "criterion": lower(pl.criterion),
        })).collect::<Vec<_>>(),
        "ramified": strs(&r.ramified()),
        "undecided": strs(&r.undecided()),
        "cofactor": r.cofactor.as_ref().map(ToString::to_string),
        "partial": r.is_partial(),
        "infinite": lower(r.infinite),
        "infinite_unramified": r.infinite.is_unramified(),
        "note": CLOSURE_NOTE,
    })
}

pub fn schinzel(s: &SchinzelInstance) -> Value {
    json!({
        "n": s.n,
        "d": s.d,
        "a": strs(&s.a),
        "t": s.t.to_string(),
        "c": strs(&s.c),
        "p": s.p_const.to_string(),
        "h_poly": poly(&s.h_poly),
        "h": s.h_value.to_string(),
        "h_primality": lower(s.primality),
        "f": s.f.as_ref().map(poly),
        "galois": s.galois.as_ref().map(galois),
        "ramification": s.ramification.as_ref().map(ramification),
        "modulus": s.modulus.map(|(u, v)| json!({ "u": u, "v": v })),
        "experimental": s.experimental,
        "stats": { "scanned": s.stats.scanned, "range": [s.stats.range.0, s.stats.range.1] },
    })
}

pub fn bms(b: &BmsTriple) -> Value {
    json!({
        "n": b.n,
        "p": b.p.to_string(),
        "q": b.q.to_string(),
        "r": b.r.to_string(),
        "r_primality": lower(b.r_primality),
        "trinomial": poly(&b.qf),
        "model": poly(&b.model),
        "galois": galois(&b.galois),
        "ramification": ramification(&b.ramification),
        "ramified_set_bound": b.ramified_set_bound(),
        "inertia_transposition": b.inertia,
        "stats": { "scanned": b.stats.scanned, "range": [b.stats.range.0, b.stats.range.1] },
    })
}

pub fn ffield(f: &FfieldInstance) -> Value {
    json!({
        "n": f.n,
        "q": f.q,
        "disc": { "coeffs": f.disc },
        "disc_constant": f.disc_is_constant(),
        "finite_candidates": f.candidates.iter().map(|(g, m)| json!({ "coeffs": g, "multiplicity": m })).collect::<Vec<_>>(),
        "ramified_set_bound": f.ramified_set_bound(),
        "samples": f.samples.iter().map(|s| json!({
            "field_size": s.field_size.to_string(),
            "gamma": s.gamma.to_string(),
            "cycle_type": s.cycle_type,
            "even": s.even,
        })).collect::<Vec<_>>(),
        "all_even": f.all_even,
        "status": "evidence-only",
        "note": EVIDENCE_NOTE,
        "seed": f.seed,
    })
}

pub fn nq_hit(h: &NqHit) -> Value {
    json!({
        "n": h.n,
        "gamma": format!("{}{}", h.kind.letter(), h.n),
        "h_gens": perms(h.h.gens()),
        "h_order": h.h.order().to_string(),
        "index": h.index.to_string(),
        "normalizer_gens": perms(h.normalizer.gens()),
        "normalizer_order": h.normalizer.order().to_string(),
        "quotient": table(&h.quotient.group),
        "iso": h.iso,
        "oracle_checked": h.oracle_checked,
    })
}

pub fn frucht(r: &FruchtRecipe, emit_graph: bool) -> Value {
    let mut v = json!({
        "vertices": r.graph.vertex_count(),
        "edges": r.graph.edges().len(),
        "aut_order": r.aut_order,
        "iso": r.iso,
        "n": r.n,
        "trinomial": bms(&r.triple),
        "declaration": r.declaration,
    });
    if emit_graph {
        v["graph"] = json!({ "n": r.graph.vertex_count(), "edges": r.graph.edges() });
    }
    v
}

fn k_poly(k: &KPolynomial) -> Value {
    json!({
        "kind": match k.kind {
            minram::constructions::realize::KKind::Stem => "stem",
            minram::constructions::realize::KKind::StemWithSqrtDisc => "stem-with-sqrt-disc",
        },
        "coeffs": strs(k.poly.coeffs()),
        "degree": k.poly.degree(),
        "irreducibility": irreducibility(&k.irreducibility),
        "ramification": ramification(&k.ramification),
    })
}

pub fn realization(c: &RealizationCertificate) -> Value {
    let source = match &c.source {
        LSource::Base => Value::Null,
        LSource::Schinzel(s) => schinzel(s),
        LSource::Bms(b) => bms(b),
        LSource::Ffield(f) => ffield(f),
    };
    json!({
        "group_order": c.group_order,
        "n": c.n,
        "gamma": format!("{}{}", c.kind.letter(), c.n),
        "h_gens": perms(&c.h_gens),
        "h_order": c.h_order.to_string(),
        "normalizer_gens": perms(&c.normalizer_gens),
        "index": c.index.to_string(),
        "quotient": table(&c.quotient),
        "iso": c.iso,
        "source": { "kind": c.source.name(), "data": source },
        "ramified_bound": c.ramified_bound,
        "k_poly": c.k_poly.as_ref().map(k_poly),
        "caveats": c.caveats,
        "statement": c.statement,
    })
}
