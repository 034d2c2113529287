//! Deterministic JSON/CSV/table emitters.
//!
//! Rationals serialize as canonical strings `"p/q"` (or `"p"` for integers),
//! never as floats, so exactness survives round trips. Polynomials in `t` or
//! `mu` serialize as coefficient lists low-to-high; the pretty-printed form
//! is informational only. Output is byte-for-byte deterministic for a fixed
//! input.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::algebra::{PositiveRoot, PositiveRoots, Rational, UniPoly};
use crate::domains::CartanDomain;
use crate::epsilon::EpsilonExpansion;
use crate::verifier::{LocusCertificate, SweepReport, Verdict};

/// Coefficients low-to-high as canonical rational strings; `["0"]` for the
/// zero polynomial.
pub fn poly_coeff_strings(p: &UniPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(Rational::to_string).collect()
}

fn poly_csv_cell(p: &UniPoly) -> String {
    poly_coeff_strings(p).join(";")
}

pub fn domain_json(domain: &CartanDomain) -> Value {
    json!({
        "label": domain.label(),
        "r": domain.r(),
        "a": domain.a(),
        "b": domain.b(),
        "d": domain.d(),
        "gamma": domain.gamma(),
    })
}

pub fn catalog_json(domains: &[CartanDomain]) -> Value {
    Value::Array(domains.iter().map(domain_json).collect())
}

pub const CATALOG_CSV_HEADER: &str = "label,r,a,b,d,gamma";

pub fn catalog_csv(domains: &[CartanDomain]) -> String {
    let mut out = String::from(CATALOG_CSV_HEADER);
    out.push('\n');
    for domain in domains {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            domain.label().unwrap_or(""),
            domain.r(),
            domain.a(),
            domain.b(),
            domain.d(),
            domain.gamma()
        );
    }
    out
}

pub fn catalog_table(domains: &[CartanDomain]) -> String {
    let mut out = format!("{:<10} {:>3} {:>3} {:>3} {:>4} {:>6}\n", "label", "r", "a", "b", "d", "gamma");
    for domain in domains {
        let _ = writeln!(
            out,
            "{:<10} {:>3} {:>3} {:>3} {:>4} {:>6}",
            domain.label().unwrap_or("-"),
            domain.r(),
            domain.a(),
            domain.b(),
            domain.d(),
            domain.gamma()
        );
    }
    out
}

pub fn expansion_json(expansion: &EpsilonExpansion) -> Value {
    let spec = expansion.spec();
    json!({
        "domain": domain_json(spec.domain()),
        "mu": spec.mu().to_string(),
        "d0": spec.d0(),
        "n": expansion.n(),
        "a": expansion
            .coefficients()
            .iter()
            .map(poly_coeff_strings)
            .collect::<Vec<_>>(),
        "constant_flags": expansion.constant_flags(),
    })
}

pub const EXPANSION_CSV_HEADER: &str = "r,a,b,d,gamma,mu,d0,j,coeffs,constant";

pub fn expansion_csv(expansion: &EpsilonExpansion) -> String {
    let spec = expansion.spec();
    let domain = spec.domain();
    let mut out = String::from(EXPANSION_CSV_HEADER);
    out.push('\n');
    for (j, coeff) in expansion.coefficients().iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            domain.r(),
            domain.a(),
            domain.b(),
            domain.d(),
            domain.gamma(),
            spec.mu(),
            spec.d0(),
            j,
            poly_csv_cell(coeff),
            expansion.constant_flags()[j]
        );
    }
    out
}

pub fn expansion_table(expansion: &EpsilonExpansion) -> String {
    let spec = expansion.spec();
    let mut out = format!(
        "domain: {}  d={} gamma={}\nmu: {}  d0: {}  n: {}\n",
        spec.domain(),
        spec.domain().d(),
        spec.domain().gamma(),
        spec.mu(),
        spec.d0(),
        expansion.n()
    );
    for (j, coeff) in expansion.coefficients().iter().enumerate() {
        let flag = if expansion.constant_flags()[j] { "constant" } else { "nonconstant" };
        let _ = writeln!(out, "a_{j} = {coeff} [{flag}]");
    }
    out
}

pub fn roots_json(roots: &PositiveRoots) -> Value {
    match roots {
        PositiveRoots::IdenticallyZero => json!({"kind": "identically_zero"}),
        PositiveRoots::Roots(list) => json!({
            "kind": "roots",
            "roots": list
                .iter()
                .map(|root| match root {
                    PositiveRoot::Exact(x) => json!({"exact": x.to_string()}),
                    PositiveRoot::Interval { lo, hi } => {
                        json!({"interval": [lo.to_string(), hi.to_string()]})
                    }
                })
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn roots_str(roots: &PositiveRoots) -> String {
    match roots {
        PositiveRoots::IdenticallyZero => "identically-zero".into(),
        PositiveRoots::Roots(list) if list.is_empty() => "empty".into(),
        PositiveRoots::Roots(list) => list
            .iter()
            .map(|root| match root {
                PositiveRoot::Exact(x) => x.to_string(),
                PositiveRoot::Interval { lo, hi } => format!("({lo},{hi})"),
            })
            .collect::<Vec<_>>()
            .join(";"),
    }
}

pub fn locus_json(cert: &LocusCertificate) -> Value {
    json!({
        "domain": domain_json(&cert.domain),
        "d0": cert.d0,
        "j": cert.j,
        "polynomials": cert.polys.iter().map(poly_coeff_strings).collect::<Vec<_>>(),
        "gcd": poly_coeff_strings(&cert.gcd),
        "positive_roots": roots_json(&cert.roots),
        "consistent": cert.consistent,
    })
}

pub const LOCUS_CSV_HEADER: &str = "r,a,b,d,gamma,d0,j,polys,gcd,positive_roots,consistent";

pub fn locus_csv_row(cert: &LocusCertificate) -> String {
    let domain = &cert.domain;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        domain.r(),
        domain.a(),
        domain.b(),
        domain.d(),
        domain.gamma(),
        cert.d0,
        cert.j,
        cert.polys.iter().map(poly_csv_cell).collect::<Vec<_>>().join("|"),
        poly_csv_cell(&cert.gcd),
        roots_str(&cert.roots),
        cert.consistent
    )
}

pub fn locus_csv(certs: &[LocusCertificate]) -> String {
    let mut out = String::from(LOCUS_CSV_HEADER);
    out.push('\n');
    for cert in certs {
        out.push_str(&locus_csv_row(cert));
        out.push('\n');
    }
    out
}

pub fn locus_table(cert: &LocusCertificate) -> String {
    let mut out = format!("domain: {}  d0={} j={}\n", cert.domain, cert.d0, cert.j);
    let _ = writeln!(out, "locus polynomials in mu (coefficients low-to-high):");
    for (i, poly) in cert.polys.iter().enumerate() {
        let _ = writeln!(out, "  k[{i}]: [{}]  = {poly}", poly_coeff_strings(poly).join(", "));
    }
    let _ = writeln!(
        out,
        "gcd: [{}]  = {}",
        poly_coeff_strings(&cert.gcd).join(", "),
        cert.gcd
    );
    let _ = writeln!(out, "positive roots: {}", roots_str(&cert.roots));
    let _ = writeln!(out, "consistent: {}", cert.consistent);
    out
}

pub fn verdict_json(verdict: &Verdict) -> Value {
    let spec = &verdict.spec;
    json!({
        "domain": domain_json(spec.domain()),
        "mu": spec.mu().to_string(),
        "d0": spec.d0(),
        "constant_js": verdict.constant_js.iter().collect::<Vec<_>>(),
        "bridge_holds": verdict.bridge_holds,
        "theorem_consistent": verdict.theorem_consistent,
    })
}

pub const VERDICT_CSV_HEADER: &str =
    "r,a,b,d,gamma,mu,d0,constant_js,bridge_holds,theorem_consistent";

pub fn verdict_csv_row(verdict: &Verdict) -> String {
    let spec = &verdict.spec;
    let domain = spec.domain();
    let constant_js = verdict
        .constant_js
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        domain.r(),
        domain.a(),
        domain.b(),
        domain.d(),
        domain.gamma(),
        spec.mu(),
        spec.d0(),
        constant_js,
        verdict.bridge_holds,
        verdict.theorem_consistent
    )
}

pub fn sweep_json(report: &SweepReport) -> Value {
    json!({
        "verdicts": report.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        "locus_certificates": report.certificates.iter().map(locus_json).collect::<Vec<_>>(),
        "all_consistent": report.all_consistent(),
    })
}

pub fn sweep_csv(report: &SweepReport) -> String {
    let mut out = String::from(VERDICT_CSV_HEADER);
    out.push('\n');
    for verdict in &report.verdicts {
        out.push_str(&verdict_csv_row(verdict));
        out.push('\n');
    }
    out
}

pub fn sweep_table(report: &SweepReport) -> String {
    let mut out = String::new();
    for verdict in &report.verdicts {
        let spec = &verdict.spec;
        let constant_js = verdict
            .constant_js
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(
            out,
            "{}  constant_js={{{constant_js}}} bridge={} consistent={}",
            spec, verdict.bridge_holds, verdict.theorem_consistent
        );
    }
    if !report.certificates.is_empty() {
        let _ = writeln!(out, "locus certificates:");
        for cert in &report.certificates {
            let _ = writeln!(
                out,
                "{}  d0={} j={} roots={} consistent={}",
                cert.domain,
                cert.d0,
                cert.j,
                roots_str(&cert.roots),
                cert.consistent
            );
        }
    }
    let _ = writeln!(out, "all_consistent: {}", report.all_consistent());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int, Var};
    use crate::domains::{catalog, HartogsSpec};
    use crate::epsilon::extract_coefficients;
    use crate::verifier::{certify_locus, verify_theorem_sweep, SweepConfig};

    fn witness_expansion() -> EpsilonExpansion {
        let disc = CartanDomain::new(1, 2, 0).unwrap();
        extract_coefficients(&HartogsSpec::new(disc, rat_int(2), 1).unwrap()).unwrap()
    }

    #[test]
    fn expansion_json_schema() {
        let value = expansion_json(&witness_expansion());
        assert_eq!(value["mu"], "2");
        assert_eq!(value["n"], 2);
        assert_eq!(value["a"][0], json!(["1"]));
        assert_eq!(value["a"][1], json!(["-3", "1/2"]));
        assert_eq!(value["a"][2], json!(["2", "-1"]));
        assert_eq!(value["constant_flags"], json!([true, false, false]));
        assert_eq!(value["domain"]["r"], 1);
        assert_eq!(value["domain"]["label"], Value::Null);
    }

    #[test]
    fn expansion_csv_and_table() {
        let expansion = witness_expansion();
        let csv = expansion_csv(&expansion);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(EXPANSION_CSV_HEADER));
        assert_eq!(lines.next(), Some("1,2,0,1,2,2,1,0,1,true"));
        assert_eq!(lines.next(), Some("1,2,0,1,2,2,1,1,-3;1/2,false"));
        assert_eq!(lines.next(), Some("1,2,0,1,2,2,1,2,2;-1,false"));
        let table = expansion_table(&expansion);
        assert!(table.contains("a_2 = 2 - 1*t [nonconstant]"), "{table}");
    }

    #[test]
    fn zero_polynomial_serializes_as_zero() {
        assert_eq!(poly_coeff_strings(&UniPoly::zero(Var::T)), vec!["0".to_string()]);
    }

    #[test]
    fn catalog_emitters_are_deterministic() {
        let domains = catalog(4);
        let csv = catalog_csv(&domains);
        assert!(csv.starts_with("label,r,a,b,d,gamma\n"));
        assert!(csv.contains("I(1,1),1,2,0,1,2"));
        assert_eq!(csv, catalog_csv(&domains));
        let json_value = catalog_json(&domains);
        assert_eq!(json_value.as_array().unwrap().len(), domains.len());
        assert!(catalog_table(&domains).contains("I(1,1)"));
    }

    #[test]
    fn locus_and_sweep_reports() {
        let disc = CartanDomain::new(1, 2, 0).unwrap();
        let cert = certify_locus(&disc, 1, 2).unwrap();
        let value = locus_json(&cert);
        assert_eq!(value["gcd"], json!(["-1", "1"]));
        assert_eq!(value["positive_roots"]["kind"], "roots");
        assert_eq!(value["positive_roots"]["roots"][0]["exact"], "1");
        assert_eq!(roots_str(&cert.roots), "1");
        assert!(locus_csv(std::slice::from_ref(&cert)).contains("1,2,0,1,2,1,2,"));
        assert!(locus_table(&cert).contains("positive roots: 1"));

        let config = SweepConfig {
            d0_values: vec![1],
            mu_grid: vec![rat(1, 2), rat_int(1)],
            certify_locus: true,
            inject_fault: false,
        };
        let report = verify_theorem_sweep(&catalog(2), &config).unwrap();
        let csv = sweep_csv(&report);
        assert!(csv.starts_with(VERDICT_CSV_HEADER));
        // hyperbolic disc row: mu=1, all three coefficients constant
        assert!(csv.contains("1,2,0,1,2,1,1,0;1;2,true,true"), "{csv}");
        let json_value = sweep_json(&report);
        assert_eq!(json_value["all_consistent"], true);
        assert!(sweep_table(&report).contains("all_consistent: true"));
        // emitters are pure
        assert_eq!(csv, sweep_csv(&report));
        assert_eq!(json_value, sweep_json(&report));
    }
}
