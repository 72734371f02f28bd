//! Registry of exactly checkable claims about the named signatures, graphs
//! and polynomials. The acceptance tests and the `verify-paper` command both
//! run from this list.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use boolcomb::graph::i8_set;
use boolcomb::{canonical_form, canonical_pair, split_bound, tripartite_2_partitions, BitGraph, MultilinearPoly};
use exact_field::ExactNumber;

use crate::catalog::{self, bell, BELL_NAMES};
use crate::classify::{classify, observe, Clause, Outcome};
use crate::error::Result;
use crate::factor::{is_associate, is_irreducible, prime_factorize, ScalarDomain};
use crate::gadget::merge;
use crate::holographic::{transform_catalog, z_inv};
use crate::props::{
    bell_property, block_inner, classify_square, closure_check, enumerate_distance2_squares, is_affine, second_orth,
    second_orth_consequences, ClosureFamily, SquareKind,
};
use crate::random;
use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub passed: bool,
    /// Computed values, one fact per line.
    pub detail: Vec<String>,
}

pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub time_limit: Option<Duration>,
    check: fn() -> Result<ClaimOutcome>,
}

#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: Vec<String>,
    pub elapsed: Duration,
}

impl Claim {
    pub fn run(&self) -> ClaimReport {
        let start = Instant::now();
        let (mut passed, mut detail) = match (self.check)() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        let elapsed = start.elapsed();
        if let Some(limit) = self.time_limit {
            if elapsed > limit {
                passed = false;
                detail.push(format!("took {elapsed:?}, over the {limit:?} budget"));
            }
        }
        ClaimReport { id: self.id, title: self.title, passed, detail, elapsed }
    }
}

/// Collects named sub-checks; the claim passes when all of them do.
struct Checks {
    ok: bool,
    lines: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks { ok: true, lines: vec![] }
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        self.ok &= cond;
        self.lines.push(format!("{} {what}", if cond { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, what: impl Into<String>) {
        self.lines.push(format!("     {}", what.into()));
    }

    fn done(self) -> Result<ClaimOutcome> {
        Ok(ClaimOutcome { passed: self.ok, detail: self.lines })
    }
}

fn table(f: &Signature) -> String {
    format!("({})", f.entry_strings().join(", "))
}

fn int(n: i64) -> ExactNumber {
    ExactNumber::from_int(n)
}

pub fn registry() -> Vec<Claim> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Claim { id: "merge-f6", title: "merging x1,x2 of f6 gives the stated table and splits into two binaries", time_limit: None, check: merge_f6 },
        Claim { id: "f6-properties", title: "f6 is irreducible, 2nd-Orth, hat-O closed, affine, with the Bell property", time_limit: secs(5), check: f6_properties },
        Claim { id: "f8-strong-bell", title: "f8 support, Zinv-invariance, 2nd-Orth with lambda 4, every Bell merge is b^3", time_limit: secs(10), check: f8_strong_bell },
        Claim { id: "g8-witnesses", title: "g8 and g8' pass the merge tests but their =2 / =2- merges break 2nd-Orth", time_limit: None, check: g8_witnesses },
        Claim { id: "h8-properties", title: "h8 has affine support and unit entries, is not affine, yet passes 2nd-Orth and Bell-affine closure", time_limit: None, check: h8_properties },
        Claim { id: "graph-lemmas", title: "alpha(G6) = 4, alpha(G8) = 16 with unique optimum up to automorphism, alpha(G10) <= 63", time_limit: secs(300), check: graph_lemmas },
        Claim { id: "tripartite", title: "K_n has a tripartite 2-partition iff n <= 5, unique for n = 5", time_limit: None, check: tripartite },
        Claim { id: "polynomial-lemmas", title: "pair-sum constancy forces complete quadratics; twice-linear forms on 5 but not 6 variables", time_limit: secs(60), check: polynomial_lemmas },
        Claim { id: "holographic-invariance", title: "Holant(F | G) = Holant(F T^-1 | T G) on random grids", time_limit: None, check: holographic_invariance },
        Claim { id: "factorization-round-trip", title: "prime factorization recovers random tensor products", time_limit: None, check: factorization_round_trip },
        Claim { id: "second-orth-consequences", title: "norm and orthogonality identities implied by 2nd-Orth", time_limit: None, check: second_orth_identities },
        Claim { id: "distance2-squares", title: "g8 squares are of type I or III; square counts match", time_limit: None, check: distance2_squares },
        Claim { id: "classifier-sanity", title: "classifier verdicts on =2, f6, f8 and g8", time_limit: None, check: classifier_sanity },
    ]
}

/// Run every claim whose id contains `filter` (all when None), in registry order.
pub fn run(filter: Option<&str>) -> Vec<ClaimReport> {
    registry().iter().filter(|c| filter.is_none_or(|f| c.id.contains(f))).map(Claim::run).collect()
}

fn merge_f6() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let f6 = catalog::f6();
    let rows = [f6.block(&[1, 2], 0)?, f6.block(&[1, 2], 3)?];
    let printed_rows = [
        Signature::from_ints(&[1, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, -1, 0, 0, 1]),
        Signature::from_ints(&[-1, 0, 0, 1, 0, 1, -1, 0, 0, -1, -1, 0, -1, 0, 0, -1]),
    ];
    c.check(rows[0] == printed_rows[0].entries() && rows[1] == printed_rows[1].entries(), "rows f^00_12 and f^11_12 match the printed rows");
    let m = merge(&f6, 1, 2, &catalog::eq2())?;
    let stated = Signature::from_ints(&[0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0]);
    c.note(format!("merge table {}", table(&m)));
    c.check(m == stated, format!("merge equals the stated table {}", table(&stated)));
    // variables of the merge are x3..x6, renumbered 1..4
    let product = catalog::neq2_minus().tensor_placed(&catalog::neq2(), &[1, 4, 2, 3])?;
    c.check(m == product, "merge equals neq2-(x3,x6) (x) neq2(x4,x5)");
    if m == product.scale(&int(2)) {
        c.note("merge equals 2 * neq2-(x3,x6) (x) neq2(x4,x5)");
    }
    let fz = prime_factorize(&m)?;
    c.check(fz.partition() == vec![vec![1, 4], vec![2, 3]], format!("prime partition {:?} pairs x3 with x6 and x4 with x5", fz.partition()));
    c.done()
}

fn f6_properties() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let f6 = catalog::f6();
    c.check(is_irreducible(&f6)?, "f6 is irreducible");
    let r = second_orth(&f6)?;
    c.check(r.passes, format!("f6 satisfies 2nd-Orth (lambda = {})", r.constant.map(|x| x.to_compact_string()).unwrap_or_default()));
    let r = closure_check(&catalog::f6_hat(), ClosureFamily::HatOTensor)?;
    c.check(r.passes, format!("all 15 neq2 merges of f6hat are in Ohat-tensor {:?}", r.violation));
    c.check(is_affine(&f6), "f6 is affine");
    let r = bell_property(&f6)?;
    c.check(r.passes, format!("f6 has the Bell property over 15 pairs x 4 binaries {:?}", r.violation));
    c.done()
}

/// Whether m (arity 2k) equals exactly b(y1,y2) (x) ... over its prime pairs,
/// for some orientation of each pair.
fn equals_tensor_power(m: &Signature, b: &Signature) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let parts = prime_factorize(m)?.partition();
    if parts.iter().any(|p| p.len() != 2) {
        return Ok(false);
    }
    for orient in 0..1usize << parts.len() {
        let mut vars = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            if orient >> k & 1 == 1 {
                vars.extend([p[1], p[0]]);
            } else {
                vars.extend([p[0], p[1]]);
            }
        }
        let mut g = Signature::scalar(ExactNumber::one());
        for _ in &parts {
            g = g.tensor(b);
        }
        // g's variable k moves to vars[k-1]
        if g.permute_vars(&vars)? == *m {
            return Ok(true);
        }
    }
    Ok(false)
}

fn f8_strong_bell() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let f8 = catalog::f8();
    let listed: Vec<usize> = i8_set().into_iter().map(|x| x as usize).collect();
    let mut supp = f8.support();
    supp.sort_unstable();
    let mut want = listed.clone();
    want.sort_unstable();
    c.check(supp == want, format!("support is the {} listed strings", listed.len()));
    c.check(z_inv().apply(&f8) == f8, "Zinv f8 = f8");
    c.check(is_irreducible(&f8)?, "f8 is irreducible");
    let r = second_orth(&f8)?;
    c.check(r.constant == Some(int(4)), format!("2nd-Orth with lambda = {}", r.constant.map(|x| x.to_compact_string()).unwrap_or("-".into())));
    let mut bad = Vec::new();
    let mut count = 0;
    for i in 1..=8 {
        for j in i + 1..=8 {
            for (name, b) in BELL_NAMES.iter().zip(bell()) {
                count += 1;
                if !equals_tensor_power(&merge(&f8, i, j, &b)?, &b)? {
                    bad.push(format!("({i},{j},{name})"));
                }
            }
        }
    }
    c.check(bad.is_empty(), format!("{count} merges equal b (x) b (x) b exactly; failures: {bad:?}"));
    c.done()
}

fn g8_witnesses() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    for (name, g) in [("g8", catalog::g8()), ("g8p", catalog::g8_prime())] {
        c.check(g.has_parity(), format!("{name} has parity"));
        c.check(second_orth(&g)?.passes, format!("{name} satisfies 2nd-Orth"));
        c.check(closure_check(&g, ClosureFamily::BellAffine)?.passes, format!("every Bell merge of {name} is affine"));
        c.check(!is_affine(&g), format!("{name} is not affine"));
    }
    let h = merge(&catalog::g8(), 1, 5, &catalog::eq2())?.scale(&ExactNumber::from_ratio(1, 2));
    let hp = merge(&catalog::g8_prime(), 1, 5, &catalog::eq2_minus())?.scale(&ExactNumber::from_ratio(-1, 2));
    for (name, s, want) in [("h", &h, 8), ("h'", &hp, -8)] {
        c.check(is_irreducible(s)?, format!("{name} is irreducible"));
        let ip = block_inner(s, &[1, 4], 0, 3)?;
        c.check(ip == int(want), format!("<{name}^00_14, {name}^11_14> = {}", ip.to_compact_string()));
    }
    c.done()
}

fn h8_properties() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let h8 = catalog::h8();
    c.check(h8.support() == catalog::f8().support(), "support of h8 equals the support of f8");
    c.check(is_affine(&catalog::f8()), "that support is an affine subspace");
    c.check(h8.support().iter().all(|&x| h8.get(x).norm_sq().is_one()), "nonzero entries have unit norm");
    c.check(!is_affine(&h8), "h8 is not affine");
    c.check(second_orth(&h8)?.passes, "h8 satisfies 2nd-Orth");
    c.check(closure_check(&h8, ClosureFamily::BellAffine)?.passes, "every Bell merge of h8 is affine");
    let mut sizes = std::collections::BTreeMap::new();
    for i in 1..=8 {
        for j in i + 1..=8 {
            for b in bell() {
                *sizes.entry(merge(&h8, i, j, &b)?.support().len()).or_insert(0usize) += 1;
            }
        }
    }
    c.note(format!("support size -> number of merges: {sizes:?}"));
    c.check(sizes.contains_key(&2) || sizes.contains_key(&8), "some merge has support size 2 or 8");
    c.done()
}

fn graph_lemmas() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let g6 = BitGraph::even(6)?;
    c.check(g6.max_independent_set()?.0 == 4, "alpha(G6) = 4");
    let g8 = BitGraph::even(8)?;
    let (a8, _) = g8.max_independent_set()?;
    c.check(a8 == 16, format!("alpha(G8) = {a8}"));
    let optima = g8.all_independent_sets_of_size(16)?;
    let target = canonical_form(&i8_set(), 8)?;
    let mut same = true;
    for s in &optima {
        same &= canonical_form(s, 8)? == target;
    }
    c.check(same, format!("all {} maximum independent sets of G8 canonicalize to I8", optima.len()));
    let rep = split_bound(10)?;
    let upper = if rep.four_fold_attained { 4 * rep.part_alpha } else { 4 * rep.part_alpha - 1 };
    c.check(upper <= 63, format!("alpha(G10) <= {upper}"));
    c.done()
}

fn tripartite() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let k4 = tripartite_2_partitions(4)?;
    c.check(k4.len() >= 2, format!("K4 has {} tripartite 2-partitions", k4.len()));
    let k5 = tripartite_2_partitions(5)?;
    // triangle on vertices 1,2,3 and the tripartite graph with parts {1,2,3}, {4}, {5}
    let tri = boolcomb::tripartite::edges_of(5, &[0b00001, 0b00010, 0b00100]);
    let rest = boolcomb::tripartite::edges_of(5, &[0b00111, 0b01000, 0b10000]);
    let want = canonical_pair(5, tri, rest);
    let all_same = k5.iter().all(|p| canonical_pair(5, p.first_edges, p.second_edges) == want);
    c.check(!k5.is_empty() && all_same, format!("all {} K5 witnesses are the triangle + K(3,1,1) pair up to relabeling", k5.len()));
    let k6 = tripartite_2_partitions(6)?;
    c.check(k6.is_empty(), format!("K6 has {} tripartite 2-partitions", k6.len()));
    c.done()
}

fn polynomial_lemmas() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    for n in 2..=4usize {
        let (mut hyp, mut bad) = (0usize, 0usize);
        for code in 0u32..1 << (1 << n) {
            let f = MultilinearPoly::from_monomials(n, (0..1u32 << n).filter(|m| code >> m & 1 == 1));
            let constant_sums = (1..=n).all(|i| {
                (i + 1..=n).all(|j| f.pair_sum(i, j, true).as_constant().is_some() && f.pair_sum(i, j, false).as_constant().is_some())
            });
            if !constant_sums {
                continue;
            }
            hyp += 1;
            if f.degree() > 2 || (f.degree() == 2 && !f.is_complete_quadratic()) {
                bad += 1;
            }
        }
        c.check(bad == 0, format!("n = {n}: {hyp} polynomials with constant pair sums, {bad} counterexamples"));
    }
    let l = |v: &[usize]| MultilinearPoly::linear(5, v, false);
    let f5 = l(&[1, 2]).mul(&l(&[2, 3])).add(&l(&[1, 2, 3, 4]).mul(&l(&[1, 2, 3, 5])));
    c.check(f5.is_complete_quadratic(), "the displayed 5-variable form is a complete quadratic");
    let w = boolcomb::twice_linear_partition(&f5)?;
    c.check(w.as_ref().is_some_and(|w| w.l[0].mul(&w.l[1]).add(&w.l[2].mul(&w.l[3])) == f5), "it has a twice-linear 2-partition");
    let q6 = MultilinearPoly::complete_quadratic(6);
    let mut found = 0;
    for lin in 0u32..1 << 7 {
        // affine part: bit 0 is the constant, bit k is x_k
        let mut f = q6.clone();
        for k in 0..=6usize {
            if lin >> k & 1 == 1 {
                f = f.add(&if k == 0 { MultilinearPoly::constant(6, true) } else { MultilinearPoly::var(6, k) });
            }
        }
        if boolcomb::twice_linear_partition(&f)?.is_some() {
            found += 1;
        }
    }
    c.check(found == 0, format!("none of the 128 complete quadratics on 6 variables has one ({found} found)"));
    c.done()
}

fn holographic_invariance() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cat = transform_catalog();
    let mut mismatches = Vec::new();
    for k in 0..25 {
        let (grid, side) = random::random_bipartite_grid(&mut rng, 8);
        let t = random::pick(&mut rng, &cat);
        let before = grid.evaluate()?;
        let after = grid.transform_bipartite(&side, t).evaluate()?;
        if before != after {
            mismatches.push(format!("grid {k} with {}: {} vs {}", t.name(), before.to_compact_string(), after.to_compact_string()));
        }
    }
    c.check(mismatches.is_empty(), format!("25 grids agree before and after the transform; mismatches: {mismatches:?}"));
    c.done()
}

fn factorization_round_trip() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = Vec::new();
    for k in 0..200 {
        let arity = rng.gen_range(1..=10);
        let (f, blocks) = random::random_product(&mut rng, arity, 4);
        let fz = prime_factorize(&f)?;
        let mut want: Vec<Vec<usize>> = blocks.iter().map(|(v, _)| v.clone()).collect();
        want.sort();
        let assoc = blocks.iter().all(|(v, s)| {
            fz.factor_containing(v[0]).is_some_and(|g| g.vars == *v && is_associate(&g.signature, s, ScalarDomain::Real))
        });
        if fz.partition() != want || !assoc || fz.recompose() != f {
            failures.push(k);
        }
    }
    c.check(failures.is_empty(), format!("200 products recovered with associate factors; failures at {failures:?}"));
    c.done()
}

fn second_orth_identities() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let f8_hat = z_inv().apply(&catalog::f8());
    for (name, f) in [("f6hat", catalog::f6_hat()), ("f8hat", f8_hat)] {
        let r = second_orth_consequences(&f)?;
        c.check(f.ars_check() && r.holds, format!("{name}: {} identities, lambda = {} {:?}", r.checked, r.lambda.map(|x| x.to_compact_string()).unwrap_or_default(), r.violation));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let qs = random::orthogonal_transforms(&transform_catalog());
    let bases = [catalog::f6(), catalog::f8(), catalog::g8(), catalog::g8_prime(), catalog::h8()];
    let zi = z_inv();
    let (mut tried, mut used) = (0, 0);
    while used < 10 && tried < 200 {
        tried += 1;
        let base = random::pick(&mut rng, &bases);
        let q = random::pick(&mut rng, &qs);
        let f = zi.apply(&q.apply(&random::shuffle_and_flip(&mut rng, base)));
        if !f.ars_check() || !second_orth(&f)?.passes {
            continue;
        }
        used += 1;
        let r = second_orth_consequences(&f)?;
        c.check(r.holds, format!("construction {used} ({}, arity {}): {} identities {:?}", q.name(), f.arity(), r.checked, r.violation));
    }
    c.check(used == 10, format!("{used} of 10 random constructions satisfied ARS and 2nd-Orth"));
    c.done()
}

fn choose(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn brute_square_count(n: usize) -> usize {
    let w = |x: usize| x.count_ones();
    let size = 1usize << n;
    let mut count = 0;
    for a in 0..size {
        for b in 0..size {
            if w(a ^ b) != 2 {
                continue;
            }
            for g in 0..size {
                for d in 0..size {
                    if w(a ^ g) == 2 && d == a ^ b ^ g && w(a ^ d) == 4 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn distance2_squares() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let sq = enumerate_distance2_squares(&catalog::g8())?;
    let count = |k| sq.iter().filter(|s| s.kind == k).count();
    c.note(format!("g8: {} squares, I = {}, III = {}", sq.len(), count(SquareKind::I), count(SquareKind::III)));
    if let Some(s) = sq.iter().find(|s| s.kind == SquareKind::II) {
        let g8 = catalog::g8();
        let v = |x: usize| g8.get(x).clone();
        let t = classify_square(&v(s.alpha), &v(s.beta), &v(s.gamma), &v(s.delta))?;
        c.note(format!(
            "{} type II squares, e.g. [[{}, {}], [{}, {}]] with canonical form {:?}",
            count(SquareKind::II),
            v(s.alpha).to_compact_string(),
            v(s.beta).to_compact_string(),
            v(s.gamma).to_compact_string(),
            v(s.delta).to_compact_string(),
            t.canonical.iter().flatten().map(|x| x.to_compact_string()).collect::<Vec<_>>()
        ));
    }
    c.check(count(SquareKind::II) == 0 && count(SquareKind::NonCanonical) == 0, "no g8 square is of type II or non-canonical");
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [4, 5] {
        let f = random::small_int_signature(&mut rng, n, 2);
        let got = enumerate_distance2_squares(&f)?.len();
        let brute = brute_square_count(n);
        let formula = (1 << n) * choose(n, 2) * choose(n - 2, 2);
        c.check(got == brute && brute == formula, format!("arity {n}: enumerated {got}, brute force {brute}, 2^n C(n,2) C(n-2,2) = {formula}"));
    }
    c.done()
}

fn classifier_sanity() -> Result<ClaimOutcome> {
    let mut c = Checks::new();
    let cases: [(&str, Signature, Option<Clause>); 4] = [
        ("eq2", catalog::eq2(), Some(Clause::Tensor)),
        ("f6", catalog::f6(), Some(Clause::Affine)),
        ("f8", catalog::f8(), Some(Clause::Affine)),
        ("g8", catalog::g8(), None),
    ];
    for (name, f, want) in cases {
        let named = vec![(name.to_string(), f.clone())];
        let v = classify(&named)?;
        let got = v.certificate.as_ref().map(|cert| cert.clause);
        let shown = match &v.certificate {
            Some(cert) => format!("TRACTABLE({}) via {}", cert.clause.name(), cert.transform.name()),
            None => "NOT_CERTIFIED".to_string(),
        };
        match want {
            Some(w) => c.check(v.outcome == Outcome::Tractable && got == Some(w), format!("{{{name}}} -> {shown}, expected TRACTABLE({})", w.name())),
            None => {
                let has_diag = v.diagnostics.iter().any(|d| d.tag == "hardness:second-order-orthogonality");
                c.check(v.outcome == Outcome::NotCertified && has_diag, format!("{{{name}}} -> {shown}, expected NOT_CERTIFIED with a 2nd-Orth diagnostic"));
            }
        }
        if let Some(cert) = &v.certificate {
            c.check(cert.verify(std::slice::from_ref(&f))?, format!("certificate for {{{name}}} re-verifies"));
            if cert.clause != Clause::Tensor {
                let image = cert.transform.apply(&f);
                c.note(format!("{name} after {}: support {} of {}, eq2 image {}", cert.transform.name(), image.support().len(), 1usize << f.arity(), table(&crate::holographic::binary_image_of_eq2(&cert.transform))));
            }
        }
        for d in observe(&named)? {
            if d.tag.starts_with("hardness") {
                c.note(format!("[{}] {}", d.tag, d.message));
                break;
            }
        }
    }
    c.done()
}
