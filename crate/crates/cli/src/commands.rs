use std::collections::BTreeMap;
use std::path::Path;

use orthomod::affine::AlgebraSpec;
use orthomod::classify::{count_formulas, enumerate_physical_with, theorem_list, SearchLimits, SearchStatus, TheoremList};
use orthomod::invariants::{partition_function, verify_physical, InvariantMatrix};
use orthomod::modular::{build_modular_data, smatrix_json, smatrix_table, ModularData};
use orthomod::Error;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Inconclusive,
    Mismatch,
}

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub status: Status,
    /// Printed to stderr: the entries behind any mismatch.
    pub witnesses: Vec<String>,
}

impl Outcome {
    fn new(json: Value, text: String) -> Self {
        Outcome {
            json,
            text,
            status: Status::Ok,
            witnesses: Vec::new(),
        }
    }

    fn flag(&mut self, status: Status, witness: String) {
        self.status = self.status.max(status);
        self.witnesses.push(witness);
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn modular(alg: &AlgebraSpec) -> Result<ModularData, String> {
    build_modular_data(alg).map_err(err)
}

fn sorted(list: &TheoremList) -> Vec<&orthomod::classify::ListedInvariant> {
    let mut v: Vec<_> = list.invariants.iter().collect();
    v.sort_by(|a, b| a.matrix.entries.cmp(&b.matrix.entries));
    v
}

fn matrix_json(m: &InvariantMatrix, extra: Value) -> Value {
    let mut v = m.to_json();
    if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
        obj.extend(more);
    }
    v
}

pub fn smatrix(algs: &[AlgebraSpec]) -> Result<Outcome, String> {
    let mut js = Vec::new();
    let mut text = String::new();
    for alg in algs {
        let md = modular(alg)?;
        js.push(smatrix_json(&md));
        text.push_str(&smatrix_table(&md));
        text.push('\n');
    }
    Ok(Outcome::new(Value::Array(js), text))
}

pub fn list(algs: &[AlgebraSpec]) -> Result<Outcome, String> {
    let mut js = Vec::new();
    let mut text = String::new();
    for alg in algs {
        let l = theorem_list(alg).map_err(err)?;
        let items = sorted(&l);
        text.push_str(&format!("{alg}: {} invariants, {} exceptional\n", l.total(), l.exceptional_count()));
        for x in &items {
            let flags = format!("{}{}", if x.exceptional { 'E' } else { '-' }, if x.symmetric { 'S' } else { '-' });
            text.push_str(&format!("  {flags}  {:<24} {}\n", x.matrix.name, partition_function(&x.matrix)));
        }
        js.push(json!({
            "algebra": alg,
            "total": l.total(),
            "exceptional": l.exceptional_count(),
            "invariants": items.iter().map(|x| matrix_json(&x.matrix, json!({
                "exceptional": x.exceptional,
                "symmetric": x.symmetric,
                "partition_function": partition_function(&x.matrix),
            }))).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome::new(Value::Array(js), text))
}

/// Brute force where the bounds allow it, otherwise construct-and-verify.
struct Search {
    mode: &'static str,
    status: Option<SearchStatus>,
    found: Vec<InvariantMatrix>,
    missing: Vec<String>,
    extra: Vec<String>,
    unphysical: Vec<String>,
    stats: Value,
}

fn search(alg: &AlgebraSpec, md: &ModularData, list: &TheoremList, budget: u64) -> Result<Search, String> {
    let limits = SearchLimits {
        node_budget: budget,
        ..SearchLimits::default()
    };
    let names: BTreeMap<&Vec<Vec<i64>>, &str> = list.invariants.iter().map(|x| (&x.matrix.entries, x.matrix.name.as_str())).collect();
    match enumerate_physical_with(md, limits) {
        Ok(res) => {
            let found: Vec<InvariantMatrix> = res
                .invariants
                .iter()
                .enumerate()
                .map(|(k, m)| m.clone().with_name(names.get(&m.entries).map_or_else(|| format!("brute-force #{}", k + 1), |s| s.to_string())))
                .collect();
            let complete = res.status == SearchStatus::Complete;
            let missing = if complete {
                sorted(list).iter().filter(|x| !found.iter().any(|m| m.entries == x.matrix.entries)).map(|x| x.matrix.name.clone()).collect()
            } else {
                Vec::new()
            };
            let extra = found.iter().filter(|m| !names.contains_key(&m.entries)).map(|m| m.name.clone()).collect();
            Ok(Search {
                mode: "brute-force",
                status: Some(res.status),
                found,
                missing,
                extra,
                unphysical: Vec::new(),
                stats: json!({
                    "commutant_dimension": res.commutant_dimension,
                    "nodes": res.stats.nodes,
                    "prunes": res.stats.prunes,
                    "candidates": res.stats.candidates,
                }),
            })
        }
        Err(Error::Unsupported(why)) => {
            let mut unphysical = Vec::new();
            for x in sorted(list) {
                if !verify_physical(&x.matrix, md).map_err(err)?.is_physical() {
                    unphysical.push(x.matrix.name.clone());
                }
            }
            Ok(Search {
                mode: "construct-and-verify",
                status: None,
                found: sorted(list).iter().map(|x| x.matrix.clone()).collect(),
                missing: Vec::new(),
                extra: Vec::new(),
                unphysical,
                stats: json!({ "reason": why }),
            })
        }
        Err(e) => Err(format!("{alg}: {e}")),
    }
}

pub fn enumerate(algs: &[AlgebraSpec], budget: u64) -> Result<Outcome, String> {
    let mut js = Vec::new();
    let mut text = String::new();
    let mut out = Outcome::new(Value::Null, String::new());
    for alg in algs {
        let md = modular(alg)?;
        let list = theorem_list(alg).map_err(err)?;
        let s = search(alg, &md, &list, budget)?;
        let status = match s.status {
            Some(SearchStatus::Complete) => "complete",
            Some(SearchStatus::Inconclusive) => "inconclusive",
            None => "not searched",
        };
        text.push_str(&format!("{alg}: {} ({status}), {} invariants\n", s.mode, s.found.len()));
        for m in &s.found {
            text.push_str(&format!("  {:<24} {}\n", m.name, partition_function(m)));
        }
        for name in &s.missing {
            text.push_str(&format!("  - listed but not found: {name}\n"));
            out.flag(Status::Mismatch, format!("{alg}: {name} is listed but was not found"));
        }
        for name in &s.extra {
            text.push_str(&format!("  + found but not listed: {name}\n"));
            out.flag(Status::Mismatch, format!("{alg}: {name} was found but is not listed"));
        }
        for name in &s.unphysical {
            out.flag(Status::Mismatch, format!("{alg}: {name} fails verification"));
        }
        if s.status == Some(SearchStatus::Inconclusive) {
            out.flag(Status::Inconclusive, format!("{alg}: node budget {budget} exhausted"));
        }
        js.push(json!({
            "algebra": alg,
            "mode": s.mode,
            "status": status,
            "search": s.stats,
            "invariants": s.found.iter().map(|m| matrix_json(m, json!({}))).collect::<Vec<_>>(),
            "diff": { "listed_not_found": s.missing, "found_not_listed": s.extra, "not_physical": s.unphysical },
        }));
    }
    out.json = Value::Array(js);
    out.text = text;
    Ok(out)
}

pub fn verify(path: &Path) -> Result<Outcome, String> {
    let raw = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let v: Value = serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", path.display()))?;
    let m = InvariantMatrix::from_json(&v).map_err(err)?;
    let md = modular(&m.alg)?;
    let rep = verify_physical(&m, &md).map_err(err)?;
    let physical = rep.is_physical();
    let mut text = format!("{} on {}: {}\n", m.name, m.alg, if physical { "physical" } else { "NOT physical" });
    for (flag, ok) in [
        ("commutes with S", rep.commutes_s),
        ("commutes with T", rep.commutes_t && rep.commutes_t_diagonal),
        ("nonnegative", rep.nonnegative),
        ("M00 = 1", rep.vacuum_ok),
        ("sum rule = 1", rep.sum_rule.as_deref() == Some("1")),
    ] {
        text.push_str(&format!("  {} {flag}\n", if ok { "ok  " } else { "FAIL" }));
    }
    let mut out = Outcome::new(
        json!({ "algebra": m.alg, "name": m.name, "physical": physical, "report": rep }),
        text,
    );
    if !physical {
        for (what, i, j) in &rep.failures {
            out.flag(Status::Mismatch, format!("{what} at ({}, {})", md.weights[*i], md.weights[*j]));
        }
        if out.witnesses.is_empty() {
            out.flag(Status::Mismatch, "not physical".into());
        }
    }
    Ok(out)
}

pub fn count(algs: &[AlgebraSpec]) -> Result<Outcome, String> {
    let mut js = Vec::new();
    let mut text = String::new();
    let mut out = Outcome::new(Value::Null, String::new());
    for alg in algs {
        let c = count_formulas(alg).map_err(err)?;
        let l = theorem_list(alg).map_err(err)?;
        // at level 3 the formula counts constructions before coincidences
        let formula_agrees = alg.level == 3 || c.total == l.total();
        let reference_agrees = c.reference_total.map_or(true, |t| t == l.total()) && c.reference_exceptional.map_or(true, |e| e == l.exceptional_count());
        let parts: Vec<String> = c.parts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        text.push_str(&format!(
            "{alg}: formula {} ({}), listed {} ({} exceptional)",
            c.total,
            parts.join(", "),
            l.total(),
            l.exceptional_count()
        ));
        if let Some(t) = c.reference_total {
            text.push_str(&format!(", reference {t}"));
        }
        if let Some(e) = c.reference_exceptional {
            text.push_str(&format!(" ({e} exceptional)"));
        }
        text.push('\n');
        if !formula_agrees {
            out.flag(Status::Mismatch, format!("{alg}: formula {} vs listed {}", c.total, l.total()));
        }
        if !reference_agrees {
            out.flag(
                Status::Mismatch,
                format!(
                    "{alg}: reference {:?}/{:?} vs listed {}/{}",
                    c.reference_total,
                    c.reference_exceptional,
                    l.total(),
                    l.exceptional_count()
                ),
            );
        }
        js.push(json!({
            "algebra": alg,
            "formula_total": c.total,
            "parts": c.parts,
            "listed_total": l.total(),
            "listed_exceptional": l.exceptional_count(),
            "reference_total": c.reference_total,
            "reference_exceptional": c.reference_exceptional,
        }));
    }
    out.json = Value::Array(js);
    out.text = text;
    Ok(out)
}

pub fn check_theorems(algs: &[AlgebraSpec], budget: u64) -> Result<Outcome, String> {
    let mut claims = Vec::new();
    let mut out = Outcome::new(Value::Null, String::new());
    let mut record = |out: &mut Outcome, alg: &AlgebraSpec, claim: &str, result: &str, detail: String| {
        match result {
            "fail" => out.flag(Status::Mismatch, format!("{alg}: {claim}: {detail}")),
            "inconclusive" => out.flag(Status::Inconclusive, format!("{alg}: {claim}: {detail}")),
            _ => {}
        }
        claims.push(json!({ "algebra": alg, "claim": claim, "result": result, "detail": detail }));
    };
    for alg in algs {
        let md = modular(alg)?;
        match md.verify() {
            Ok(()) => record(&mut out, alg, "modular data", "pass", String::new()),
            Err(e) => record(&mut out, alg, "modular data", "fail", e.to_string()),
        }
        let list = theorem_list(alg).map_err(err)?;
        let counts = count(std::slice::from_ref(alg))?;
        let detail = counts.text.trim().to_string();
        record(&mut out, alg, "counts", if counts.status == Status::Ok { "pass" } else { "fail" }, detail);
        let mut bad = Vec::new();
        for x in &list.invariants {
            if !verify_physical(&x.matrix, &md).map_err(err)?.is_physical() {
                bad.push(x.matrix.name.clone());
            }
        }
        let result = if bad.is_empty() { "pass" } else { "fail" };
        record(&mut out, alg, "listed invariants are physical", result, bad.join(", "));
        let s = search(alg, &md, &list, budget)?;
        let (result, detail) = match s.status {
            None => ("skipped", format!("construct-and-verify only: {}", s.stats["reason"].as_str().unwrap_or(""))),
            Some(SearchStatus::Inconclusive) => ("inconclusive", format!("node budget {budget} exhausted")),
            Some(SearchStatus::Complete) if s.missing.is_empty() && s.extra.is_empty() => ("pass", format!("{} invariants", s.found.len())),
            Some(SearchStatus::Complete) => ("fail", format!("listed not found: {:?}; found not listed: {:?}", s.missing, s.extra)),
        };
        record(&mut out, alg, "brute force = list", result, detail);
    }
    let text = claims
        .iter()
        .map(|c| {
            format!(
                "{:<12} {:<8} {:<32} {}\n",
                c["result"].as_str().unwrap_or("").to_uppercase(),
                c["algebra"]["series"].as_str().map_or(String::new(), |s| format!("{s}{},{}", c["algebra"]["rank"], c["algebra"]["level"])),
                c["claim"].as_str().unwrap_or(""),
                c["detail"].as_str().unwrap_or("")
            )
        })
        .collect();
    out.json = Value::Array(claims);
    out.text = text;
    Ok(out)
}
