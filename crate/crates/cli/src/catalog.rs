//! Worked examples with their expected values.
//!
//! Each entry computes a map of named facts and compares it against its
//! expectations. Every expectation carries a provenance and a short
//! description of where the value comes from.

use std::collections::BTreeMap;

use cicy_core::chow::{chern_of_sum, AmbientSpace};
use cicy_core::invariants::{
    betti2, ci_point_count, double_cover_euler, euler_number, hilbert_polynomial, hodge_numbers,
};
use cicy_core::transitions::{analyze, contract, find_contraction_sites, split, ContractionSite};
use cicy_core::web::{connect_to_c1111, verify_chain};
use cicy_core::{BigInt, ConfigurationMatrix, Error, MultiDegree, TransitionChain};
use serde_json::Value;

use crate::json::{int, Input, Provenance, Report};
use crate::text;

pub enum Subject {
    Matrix(ConfigurationMatrix),
    /// A computation that is not tied to a single configuration.
    Recipe(&'static str),
}

pub struct Expected {
    pub name: &'static str,
    pub value: Value,
    pub provenance: Provenance,
    pub source: &'static str,
}

type Facts = BTreeMap<String, Value>;

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub subject: Subject,
    pub expected: Vec<Expected>,
    compute: fn(&mut Facts) -> Result<(), Error>,
}

pub struct EntryRun {
    pub report: Report,
    /// Set when the computation itself failed; the report then holds the
    /// facts gathered before the failure.
    pub error: Option<Error>,
}

fn m(rows: &[(u32, &[i64])]) -> ConfigurationMatrix {
    ConfigurationMatrix::from_rows(rows).expect("catalog matrices are well formed")
}

fn exp(
    name: &'static str,
    value: impl Into<Value>,
    provenance: Provenance,
    source: &'static str,
) -> Expected {
    Expected {
        name,
        value: value.into(),
        provenance,
        source,
    }
}

fn put(facts: &mut Facts, name: &str, value: impl Into<Value>) {
    facts.insert(name.to_owned(), value.into());
}

pub fn quintic() -> ConfigurationMatrix {
    m(&[(4, &[5])])
}

pub fn split_quintic() -> ConfigurationMatrix {
    m(&[(4, &[4, 1]), (1, &[1, 1])])
}

pub fn p2p3p1_split() -> ConfigurationMatrix {
    m(&[(2, &[1, 1, 1]), (3, &[1, 1, 2]), (1, &[0, 0, 2])])
}

pub fn double_solid() -> ConfigurationMatrix {
    m(&[(3, &[4]), (1, &[2])])
}

pub fn betti_example() -> ConfigurationMatrix {
    m(&[
        (4, &[3, 1, 1, 0, 0]),
        (2, &[0, 1, 0, 1, 1]),
        (2, &[0, 0, 1, 1, 1]),
    ])
}

pub fn schoen() -> ConfigurationMatrix {
    m(&[(2, &[3, 0]), (2, &[0, 3]), (1, &[1, 1])])
}

pub fn bicubic() -> ConfigurationMatrix {
    m(&[(2, &[3]), (2, &[3])])
}

/// The chain of formal correspondences between `C_1111` and the quintic,
/// stored from `C_1111`: one split into the five-row matrix with a `P^4`
/// row of ones, then four contractions of `P^1` rows down to `[4 || 5]`.
pub fn quintic_web_chain() -> TransitionChain {
    let unit = |i: usize| {
        let mut d = vec![0; 4];
        d[i] = 1;
        MultiDegree(d)
    };
    let mut chain = TransitionChain::new(ConfigurationMatrix::c1111());
    chain
        .push_split(
            0,
            4,
            vec![MultiDegree(vec![1; 4]), unit(0), unit(1), unit(2), unit(3)],
        )
        .expect("five parts summing to (2,2,2,2)");
    for _ in 0..4 {
        chain
            .push_contract(0)
            .expect("leading P^1 row has two ones");
    }
    chain
}

fn chi_zero(cfg: &ConfigurationMatrix) -> Result<Value, Error> {
    let ones = MultiDegree(vec![1; cfg.num_rows()]);
    let value = hilbert_polynomial(cfg, &ones)?.value_at(0);
    Ok(Value::from(value.to_string()))
}

/// Runs and verifies `connect_to_c1111`; a failed verification is an
/// internal error.
fn connect_facts(facts: &mut Facts, cfg: &ConfigurationMatrix) -> Result<TransitionChain, Error> {
    let chain = connect_to_c1111(cfg)?;
    let report = verify_chain(&chain).map_err(|f| Error::Connect(f.to_string()))?;
    put(facts, "connect_verified", report.ends_at_c1111);
    put(facts, "connect_steps", chain.len());
    Ok(chain)
}

fn quintic_web(f: &mut Facts) -> Result<(), Error> {
    let site = ContractionSite::new(&split_quintic(), 1)?;
    let r = analyze(&site)?;
    put(f, "odp_count", int(&r.odp_count));
    put(f, "euler_smoothed", int(&r.euler_smoothed));
    put(f, "euler_resolved", int(&r.euler_resolved));
    put(
        f,
        "euler_difference",
        int(&(&r.euler_resolved - &r.euler_smoothed)),
    );
    put(f, "contracts_to_quintic", contract(&site) == quintic());
    put(f, "chi_0", chi_zero(&quintic())?);

    let stored = quintic_web_chain();
    let verified = verify_chain(&stored).map_err(|e| Error::Connect(e.to_string()))?;
    put(f, "stored_chain_verified", true);
    let last = verified.steps.last().expect("stored chain is non-empty");
    put(
        f,
        "stored_chain_final_odp_count",
        int(&last.report.odp_count),
    );
    let own = connect_facts(f, &quintic())?;
    put(
        f,
        "endpoints_shared",
        own.start().is_equivalent(stored.end()) && own.end().is_equivalent(stored.start()),
    );
    Ok(())
}

fn p2p3p1(f: &mut Facts) -> Result<(), Error> {
    let cfg = p2p3p1_split();
    let site = ContractionSite::new(&cfg, 0)?;
    let r = analyze(&site)?;
    put(f, "euler", int(&euler_number(&cfg)?));
    put(f, "euler_contracted", int(&euler_number(&contract(&site))?));
    put(f, "odp_count", int(&r.odp_count));
    put(
        f,
        "euler_difference",
        int(&(&r.euler_resolved - &r.euler_smoothed)),
    );
    put(f, "contracted", text::lines(&contract(&site)).join("; "));
    let c = chern_of_sum(&site.reduced_ambient(), &site.e_bundles())?;
    for p in 1..=3 {
        put(f, &format!("c{}", p), c.graded_part(p).to_string());
    }
    put(f, "chi_0", chi_zero(&cfg)?);
    connect_facts(f, &cfg)?;
    Ok(())
}

fn double_solid_recipe(f: &mut Facts) -> Result<(), Error> {
    let p3 = AmbientSpace::projective(3)?;
    let quartic = MultiDegree(vec![4]);
    let points = ci_point_count(&p3, &[quartic.clone(), quartic.clone(), quartic])?;
    let octic = euler_number(&m(&[(3, &[8])]))?;
    let cover = double_cover_euler(&BigInt::from(4), &octic);
    let solid = euler_number(&double_solid())?;
    put(f, "point_count", int(&points));
    put(f, "euler_octic_surface", int(&octic));
    put(f, "euler_double_cover", int(&cover));
    put(f, "euler", int(&solid));
    put(f, "euler_difference", int(&(&solid - &cover)));
    put(f, "twice_point_count", int(&(BigInt::from(2) * &points)));
    put(
        f,
        "contraction_sites",
        find_contraction_sites(&double_solid()).len(),
    );
    put(f, "chi_0", chi_zero(&double_solid())?);

    // c2(E) = t (4s + t) squares to zero on P^3 x P^1
    let ineffective = split(
        &double_solid(),
        0,
        1,
        &[MultiDegree(vec![0, 1]), MultiDegree(vec![4, 1])],
    )?;
    let r = analyze(&ContractionSite::new(&ineffective, 2)?)?;
    put(f, "ineffective_split_odp_count", int(&r.odp_count));
    put(f, "ineffective_split_flag", r.ineffective);
    connect_facts(f, &double_solid())?;
    Ok(())
}

fn betti(f: &mut Facts) -> Result<(), Error> {
    let cfg = betti_example();
    put(f, "betti2", betti2(&cfg)?);
    let surface = m(&[(2, &[1, 1]), (2, &[1, 1])]);
    put(f, "surface_euler", int(&euler_number(&surface)?));
    put(f, "surface_betti2", betti2(&surface)?);
    put(f, "chi_0", chi_zero(&cfg)?);
    let h = hodge_numbers(&cfg)?;
    put(f, "h11", h.h11);
    put(f, "h21", h.h21);
    connect_facts(f, &cfg)?;
    Ok(())
}

fn c1111(f: &mut Facts) -> Result<(), Error> {
    let cfg = ConfigurationMatrix::c1111();
    put(f, "euler", int(&euler_number(&cfg)?));
    let h = hodge_numbers(&cfg)?;
    put(f, "h11", h.h11);
    put(f, "h21", h.h21);
    put(f, "chi_0", chi_zero(&cfg)?);
    connect_facts(f, &cfg)?;
    Ok(())
}

fn schoen_entry(f: &mut Facts) -> Result<(), Error> {
    let cfg = schoen();
    let v = cfg.validate();
    put(f, "is_cicy", v.is_cicy());
    put(f, "block_diagonal", v.block_diagonal);
    let sites = find_contraction_sites(&cfg);
    put(
        f,
        "site_rows",
        sites.iter().map(|s| s.row() + 1).collect::<Vec<_>>(),
    );
    let site = sites.first().ok_or(Error::NoSite { row: 2 })?;
    put(
        f,
        "contracts_to_bicubic",
        contract(site).is_equivalent(&bicubic()),
    );
    let r = analyze(site)?;
    put(f, "odp_count", int(&r.odp_count));
    put(f, "euler", int(&r.euler_resolved));
    put(f, "euler_contracted", int(&r.euler_smoothed));
    put(f, "betti2", betti2(&cfg)?);
    put(f, "chi_0", chi_zero(&cfg)?);
    connect_facts(f, &cfg)?;
    Ok(())
}

use Provenance::{Derived, Literature, Trivial};

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "quintic-web",
            summary: "determinantal quintic, its small resolution, and the web path to C_1111",
            subject: Subject::Matrix(split_quintic()),
            expected: vec![
                exp("odp_count", 16, Literature, "the determinantal quintic has 16 nodes"),
                exp("euler_smoothed", -200, Derived, "Gauss-Bonnet on [4 || 5]"),
                exp("euler_resolved", -168, Derived, "Gauss-Bonnet on [4 || 4 1; 1 || 1 1]"),
                exp("euler_difference", 32, Derived, "twice the node count"),
                exp("contracts_to_quintic", true, Trivial, "merging the one-columns"),
                exp("chi_0", "0", Derived, "Calabi-Yau threefolds have chi(O_X) = 0"),
                exp("stored_chain_verified", true, Literature, "chain of formal correspondences from the quintic to C_1111"),
                exp("stored_chain_final_odp_count", 16, Literature, "last contraction of the stored chain is the 16-node quintic"),
                exp("connect_verified", true, Derived, "connectedness of the web of CICY configurations"),
                exp("endpoints_shared", true, Derived, "algorithmic chain and stored chain join the same configurations"),
            ],
            compute: quintic_web,
        },
        CatalogEntry {
            name: "p2p3p1-split",
            summary: "split of [3 || 4; 1 || 2] along P^2 with 28 nodes",
            subject: Subject::Matrix(p2p3p1_split()),
            expected: vec![
                exp("euler", -112, Literature, "Euler numbers of the pair are -112 and -168"),
                exp("euler_contracted", -168, Literature, "Euler numbers of the pair are -112 and -168"),
                exp("odp_count", 28, Literature, "coefficient of s^3 t is 28"),
                exp("euler_difference", 56, Derived, "twice the node count"),
                exp("contracted", "3 | 4; 1 | 2", Trivial, "merging the one-columns"),
                exp("c1", "4*s1 + 2*s2", Literature, "Chern classes of E on P^3 x P^1"),
                exp("c2", "5*s1^2 + 4*s1*s2", Literature, "Chern classes of E on P^3 x P^1"),
                exp("c3", "2*s1^3 + 2*s1^2*s2", Literature, "Chern classes of E on P^3 x P^1"),
                exp("chi_0", "0", Derived, "Calabi-Yau threefolds have chi(O_X) = 0"),
                exp("connect_verified", true, Derived, "connectedness of the web of CICY configurations"),
            ],
            compute: p2p3p1,
        },
        CatalogEntry {
            name: "double-solid",
            summary: "quartic double solid degenerating to [3 || 4; 1 || 2] with 64 nodes",
            subject: Subject::Recipe(
                "three quartics in P^3, the octic branch surface, the double cover of P^3, and [3 || 4; 1 || 2]",
            ),
            expected: vec![
                exp("point_count", 64, Literature, "three general quartics meet in 64 points"),
                exp("euler_octic_surface", 304, Literature, "Euler number of the octic surface"),
                exp("euler_double_cover", -296, Literature, "double cover of P^3 branched along an octic"),
                exp("euler", -168, Literature, "Euler number of [3 || 4; 1 || 2]"),
                exp("euler_difference", 128, Literature, "128 = 2 * 64"),
                exp("twice_point_count", 128, Literature, "128 = 2 * 64"),
                exp("contraction_sites", 0, Trivial, "the P^1 row has entry 2, not ones"),
                exp("ineffective_split_odp_count", 0, Derived, "split of the column into (0,1) and (4,1)"),
                exp("ineffective_split_flag", true, Derived, "ineffective splittings have no nodes"),
                exp("chi_0", "0", Derived, "Calabi-Yau threefolds have chi(O_X) = 0"),
                exp("connect_verified", true, Derived, "connectedness of the web of CICY configurations"),
            ],
            compute: double_solid_recipe,
        },
        CatalogEntry {
            name: "betti-example",
            summary: "second Betti number from the Lefschetz sequence",
            subject: Subject::Matrix(betti_example()),
            expected: vec![
                exp("betti2", 5, Literature, "the second Betti number of X is 5"),
                exp("surface_euler", 6, Literature, "the surface [2 || 1 1; 2 || 1 1] has e = 6"),
                exp("surface_betti2", 4, Literature, "the surface [2 || 1 1; 2 || 1 1] has b2 = 4"),
                exp("h11", 5, Derived, "h11 = b2"),
                exp("chi_0", "0", Derived, "Calabi-Yau threefolds have chi(O_X) = 0"),
                exp("connect_verified", true, Derived, "connectedness of the web of CICY configurations"),
            ],
            compute: betti,
        },
        CatalogEntry {
            name: "c1111",
            summary: "the terminal configuration of four [1 || 2] rows",
            subject: Subject::Matrix(ConfigurationMatrix::c1111()),
            expected: vec![
                exp("euler", -128, Derived, "hand expansion of c(T) s(E) c_4(E) on (P^1)^4"),
                exp("h11", 4, Derived, "one class per P^1 factor"),
                exp("h21", 68, Derived, "h21 = h11 - e/2"),
                exp("chi_0", "0", Derived, "Calabi-Yau threefolds have chi(O_X) = 0"),
                exp("connect_verified", true, Trivial, "already terminal"),
                exp("connect_steps", 0, Trivial, "already terminal"),
            ],
            compute: c1111,
        },
        CatalogEntry {
            name: "schoen-fiber-product",
            summary: "fiber product of rational elliptic surfaces over P^1 and its contraction to the bicubic",
            subject: Subject::Matrix(schoen()),
            expected: vec![
                exp("is_cicy", true, Trivial, "row sums n + 1, dimension 3"),
                exp("block_diagonal", false, Trivial, "the P^1 row couples both cubics"),
                exp("site_rows", vec![3], Literature, "fiber products of rational elliptic surfaces contract determinantally"),
                exp("contracts_to_bicubic", true, Literature, "fiber products of rational elliptic surfaces contract determinantally"),
                exp("odp_count", 81, Derived, "integral of (3a)(3b) squared over P^2 x P^2"),
                exp("euler", 0, Derived, "Gauss-Bonnet on the fiber product"),
                exp("euler_contracted", -162, Derived, "Gauss-Bonnet on the bicubic"),
                exp("betti2", 19, Derived, "Lefschetz recursion"),
                exp("chi_0", "0", Derived, "Calabi-Yau threefolds have chi(O_X) = 0"),
                exp("connect_verified", true, Derived, "connectedness of the web of CICY configurations"),
            ],
            compute: schoen_entry,
        },
    ]
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

pub fn run(entry: &CatalogEntry) -> EntryRun {
    let mut facts = Facts::new();
    let error = (entry.compute)(&mut facts).err();
    let input = Input {
        source: Some(format!("catalog:{}", entry.name)),
        matrix: match &entry.subject {
            Subject::Matrix(cfg) => Some(text::lines(cfg)),
            Subject::Recipe(_) => None,
        },
        ..Input::default()
    };
    let mut report = Report::new(input);
    if let Subject::Recipe(recipe) = &entry.subject {
        report.result("recipe", *recipe);
    }
    let sources: serde_json::Map<String, Value> = entry
        .expected
        .iter()
        .map(|e| (e.name.to_owned(), Value::from(e.source)))
        .collect();
    for e in &entry.expected {
        let got = facts.get(e.name).cloned().unwrap_or(Value::Null);
        report.check(e.name, e.value.clone(), got, e.provenance);
    }
    for (k, v) in facts {
        report.result(&k, v);
    }
    report.result("sources", Value::Object(sources));
    if let Some(err) = &error {
        report.result("error", err.to_string());
    }
    EntryRun { report, error }
}
