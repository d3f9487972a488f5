//! Verification suites: golden-table internal consistency, transform
//! round-trips, and enumeration against the reference tables. Shared by
//! the `verify` CLI subcommand and the acceptance tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alpha::{alpha_from_c, beta_entries, hermite_half, meeussen_check};
use crate::binom::binomial;
use crate::boxext::{
    cd_triangle, chat_fhat_identity, chat_from_c, e_entry, fhat_band, fhat_from_a,
    series_box_identity_a, series_box_identity_c,
};
use crate::counts::{
    a_triangle_by_enumeration, box_b_column, c_triangle_by_enumeration, count_forests, count_pd,
    f_triangle_by_enumeration, EnumOptions,
};
use crate::golden::{assemble_full_a, complete_c, golden, verify_cells, verify_triangle, VerifyReport};
use crate::hanna::{hanna_check, t_from_b};
use crate::knuth::{p1_euler, reconvolve, topo_deconvolve};
use crate::pdn;
use crate::transform::{
    a_entry_from_c, a_entry_from_f, a_from_pd, b_from_a, c_entry_from_d, c_from_a, closed_form_c,
    d_from_c, f_from_a, f_from_a_kind, pd_from_a,
};
use crate::triangle::TriangleKind;
use crate::Result;

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl SuiteOutcome {
    fn ok(name: &str, detail: impl Into<String>) -> Self {
        SuiteOutcome {
            name: name.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Self {
        SuiteOutcome {
            name: name.into(),
            pass: false,
            detail: detail.into(),
        }
    }

    fn from_report(name: &str, report: &VerifyReport, min_matched: usize) -> Self {
        let detail = report.to_string();
        if report.is_clean() && report.matched >= min_matched {
            SuiteOutcome::ok(name, detail)
        } else {
            SuiteOutcome::fail(name, detail)
        }
    }
}

impl std::fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} ({})",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

/// Golden-data internal consistency. Runs without any enumeration; this
/// is the gate on the embedded transcription itself.
pub fn suite_tables() -> Result<Vec<SuiteOutcome>> {
    let mut out = Vec::new();
    let a_full = assemble_full_a(23)?;
    let c = complete_c(10)?;

    // binomial transform of A rows reproduces every known p_d(n)
    let rep = verify_cells("pd", |n, d| pd_from_a(&a_full, n, d).ok())?;
    out.push(SuiteOutcome::from_report(
        "A rows reproduce the partition table under the binomial transform",
        &rep,
        225,
    ));

    // inverse binomial transform of the partition table reproduces A
    let pd_tri = golden("pd")?.triangle()?;
    let rep = verify_cells("A", |n, r| {
        if r == 0 {
            return Some(if n == 1 { BigInt::one() } else { BigInt::zero() });
        }
        // needs p_d(n) for d = 1..r-1
        if (1..r).any(|d| golden("pd").unwrap().get(n, d).is_none()) {
            return None;
        }
        a_from_pd(&pd_tri, n, r).ok()
    })?;
    out.push(SuiteOutcome::from_report(
        "inverse binomial transform of the partition table reproduces A",
        &rep,
        190,
    ));

    // C rows reproduce A along the m <= 10 diagonals
    let rep = verify_cells("A", |n, r| {
        let m = n.checked_sub(r + 1)?;
        if m > 10 {
            return None;
        }
        a_entry_from_c(&c, m, r).ok()
    })?;
    // 132 printed cells have m <= 10; the rest are genuinely uncovered
    out.push(SuiteOutcome::from_report(
        "C rows reproduce A along the m <= 10 diagonals",
        &rep,
        132,
    ));

    // D from C matches the embedded D rows
    let d = d_from_c(&c, 10)?;
    let rep = verify_triangle(&d, "D")?;
    out.push(SuiteOutcome::from_report(
        "D derived from C matches the embedded D rows",
        &rep,
        91,
    ));

    // F from the full A matches the embedded F rows (rows 24-25 need A
    // data beyond the embedded tables and stay uncovered)
    let f = f_from_a(&a_full, 23)?;
    let rep = verify_triangle(&f, "F")?;
    out.push(SuiteOutcome::from_report(
        "F derived from A matches the embedded F rows 1..23",
        &rep,
        140,
    ));

    // F diagonal: f_{2m+1,m} = (m+1)^{m-1}
    let f_gold = golden("F")?;
    let mut bad = Vec::new();
    for m in 0..=12usize {
        let want = BigInt::from(m as u64 + 1).pow(m.saturating_sub(1) as u32);
        match f_gold.get(2 * m + 1, m) {
            Some(v) if *v == want => {}
            other => bad.push(format!("m={m}: {other:?} != {want}")),
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok(
            "embedded F diagonal follows (m+1)^(m-1) for m <= 12",
            "13 entries",
        )
    } else {
        SuiteOutcome::fail("embedded F diagonal follows (m+1)^(m-1) for m <= 12", bad.join("; "))
    });

    // beta column 0 is H_z(1/2) on the numeric cells
    let beta = golden("beta")?;
    let h = hermite_half(11);
    let mut matched = 0usize;
    let mut bad = Vec::new();
    for (z, hz) in h.iter().enumerate() {
        match beta.get(z, 0) {
            Some(v) if v == hz => matched += 1,
            Some(v) => bad.push(format!("z={z}: {v} != {hz}")),
            None => {}
        }
    }
    out.push(if bad.is_empty() && matched >= 12 {
        SuiteOutcome::ok(
            "embedded beta column 0 matches H_z(1/2) for z <= 11",
            format!("{matched} entries"),
        )
    } else {
        SuiteOutcome::fail(
            "embedded beta column 0 matches H_z(1/2) for z <= 11",
            bad.join("; "),
        )
    });

    // the embedded-F service path reproduces Euler's p_1 through n = 25,
    // exercising F rows 24 and 25 which no other check covers
    let p1 = p1_euler(25);
    let mut bad = Vec::new();
    for (n, want) in p1.iter().enumerate().skip(1) {
        match pdn::pd(n, 1) {
            Ok(v) if &v == want => {}
            other => bad.push(format!("n={n}: {other:?} != {want}")),
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok(
            "embedded F rows 1..25 reproduce Euler's p_1 column",
            "25 values",
        )
    } else {
        SuiteOutcome::fail(
            "embedded F rows 1..25 reproduce Euler's p_1 column",
            bad.join("; "),
        )
    });

    Ok(out)
}

/// Transform-stack checks: round-trips, closed forms, Hanna, alpha/beta,
/// the Knuth convolution, and the box-appendix identities.
pub fn suite_transforms() -> Result<Vec<SuiteOutcome>> {
    let mut out = Vec::new();
    let a_full = assemble_full_a(23)?;
    let c_gold = complete_c(10)?;

    // A -> C inversion against the embedded rows; m <= 7 is as far as 23
    // rows of A reach (row m needs the diagonal up to n = 3m+1)
    let c = c_from_a(&a_full, 7)?;
    let rep = verify_cells("C", |m, x| if m > 7 { None } else { c.entry(m, x) })?;
    out.push(SuiteOutcome::from_report(
        "A -> C inversion reproduces the embedded C rows 0..7",
        &rep,
        64,
    ));
    let mut bad = Vec::new();
    for m in 0..=7usize {
        if c.need(m, 2 * m)? != crate::binom::double_factorial(2 * m as i64 - 1) {
            bad.push(format!("m={m}"));
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok("C diagonal c_{m,2m} = (2m-1)!!", "m <= 7")
    } else {
        SuiteOutcome::fail("C diagonal c_{m,2m} = (2m-1)!!", bad.join(", "))
    });

    // C -> D -> C round trip
    let d = d_from_c(&c_gold, 10)?;
    let mut bad = Vec::new();
    for m in 0..=10usize {
        for x in 0..=2 * m {
            let back = c_entry_from_d(&d, m, x)?;
            let want = c_gold.need(m, x).unwrap_or_else(|_| back.clone());
            if back != want {
                bad.push(format!("(m,x)=({m},{x})"));
            }
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok("C <-> D round trip exact for m <= 10", "121 entries")
    } else {
        SuiteOutcome::fail("C <-> D round trip exact for m <= 10", bad.join(", "))
    });

    // A -> F -> A round trip
    let f = f_from_a(&a_full, 23)?;
    let mut bad = Vec::new();
    for n in 1..=23usize {
        for r in 0..n {
            if a_entry_from_f(&f, n - r - 1, r)? != a_full.need(n, r)? {
                bad.push(format!("(n,r)=({n},{r})"));
            }
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok("A <-> F round trip exact for n <= 23", "276 entries")
    } else {
        SuiteOutcome::fail("A <-> F round trip exact for n <= 23", bad.join(", "))
    });

    // closed forms c_{m,2m-z} match the inversion wherever both exist
    let mut matched = 0usize;
    let mut bad = Vec::new();
    for z in 0..=5usize {
        for m in 0..=10usize {
            if 2 * m < z {
                continue;
            }
            let x = 2 * m - z;
            let Ok(want) = c_gold.need(m, x) else { continue };
            let got = closed_form_c(m, z)?;
            if got == want {
                matched += 1;
            } else {
                bad.push(format!("(m,z)=({m},{z}): {got} != {want}"));
            }
        }
    }
    out.push(if bad.is_empty() && matched >= 50 {
        SuiteOutcome::ok(
            "closed forms c_{m,2m-z}, z <= 5 match the C rows",
            format!("{matched} entries"),
        )
    } else {
        SuiteOutcome::fail(
            "closed forms c_{m,2m-z}, z <= 5 match the C rows",
            bad.join("; "),
        )
    });

    // Hanna: T integral through row 20 (integral by construction; the
    // recursion is exercised here) and row sums of powers give p_d(n)
    let b = b_from_a(&a_full)?;
    let t = t_from_b(&b, 20)?;
    let mismatches = hanna_check(&t, |n, d| pd_from_a(&a_full, n, d), 12, 6)?;
    out.push(if mismatches.is_empty() {
        SuiteOutcome::ok(
            "Hanna triangle rows 1..20 solve; row sums of T^d give p_d(n) for n <= 12, d <= 6",
            "exact",
        )
    } else {
        SuiteOutcome::fail(
            "Hanna triangle rows 1..20 solve; row sums of T^d give p_d(n) for n <= 12, d <= 6",
            format!("{} mismatches: {:?}", mismatches.len(), &mismatches[..mismatches.len().min(3)]),
        )
    });

    // alpha rows m <= 10 integral; beta matches the numeric cells of the
    // embedded beta table on the computable region; Meeussen for z <= 10
    let alpha = alpha_from_c(&c_gold, 10)?;
    let betas = beta_entries(&alpha)?;
    // cells beyond y = floor(z/2) are definitional zeros (the support
    // convention); the 11 numeric cells with z - y > 10 stay uncovered
    let rep = verify_cells("beta", |z, y| {
        if y > z / 2 {
            return Some(BigInt::zero());
        }
        betas.get(&(z, y)).cloned()
    })?;
    out.push(SuiteOutcome::from_report(
        "beta derived from alpha matches the embedded numeric beta cells",
        &rep,
        176,
    ));
    let meeussen = meeussen_check(&betas, 10)?;
    out.push(if meeussen.iter().all(|r| r.matches) {
        SuiteOutcome::ok("beta_{z,0} = H_z(1/2) for z <= 10", "11 values")
    } else {
        SuiteOutcome::fail(
            "beta_{z,0} = H_z(1/2) for z <= 10",
            format!("{meeussen:?}"),
        )
    });
    // alpha <-> beta round trip on full rows
    let mut bad = Vec::new();
    for m in 0..=10usize {
        for z in 0..=2 * m {
            let mut acc = BigInt::zero();
            for y in 0..=z / 2 {
                if let Some(b) = betas.get(&(z, y)) {
                    acc += binomial(m, z - y) * b;
                } else {
                    acc = alpha.need(m, z)?; // outside computable region
                    break;
                }
            }
            if acc != alpha.need(m, z)? {
                bad.push(format!("(m,z)=({m},{z})"));
            }
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok("alpha decomposes through beta (round trip)", "rows m <= 10")
    } else {
        SuiteOutcome::fail("alpha decomposes through beta (round trip)", bad.join(", "))
    });

    // Knuth deconvolution: round trip and nonnegativity for d <= 5
    let pd_gold = golden("pd")?;
    let p1 = p1_euler(23);
    let mut bad = Vec::new();
    for d in 2..=5usize {
        let mut pm = vec![BigInt::one()];
        for n in 1..=23 {
            match pd_gold.get(n, d) {
                Some(v) => pm.push(v.clone()),
                None => break,
            }
        }
        let dm = topo_deconvolve(&pm, &p1)?;
        if reconvolve(&dm, &p1) != pm {
            bad.push(format!("d={d}: round trip failed"));
        }
        if dm.iter().any(|v| v < &BigInt::zero()) {
            bad.push(format!("d={d}: negative topological-sequence count"));
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok(
            "topological-sequence deconvolution round-trips and stays nonnegative",
            "d = 2..5",
        )
    } else {
        SuiteOutcome::fail(
            "topological-sequence deconvolution round-trips and stays nonnegative",
            bad.join("; "),
        )
    });

    // c^D: inverse transform of e_{m,r} = C(C(r,2), m), with round trip
    let cd = cd_triangle(8);
    let mut bad = Vec::new();
    for m in 0..=8usize {
        for r in 0..=16usize {
            if a_entry_from_c(&cd, m, r)? != e_entry(m, r) {
                bad.push(format!("(m,r)=({m},{r})"));
            }
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok("c^D inverts the all-type-1 counts C(C(r,2), m)", "m <= 8")
    } else {
        SuiteOutcome::fail("c^D inverts the all-type-1 counts C(C(r,2), m)", bad.join(", "))
    });

    // box appendix: Chat, Fhat, their identity, the first F divergence,
    // and the series identities
    let cbox2 = golden("Cbox2")?.triangle()?;
    let chat = chat_from_c(&c_gold, &cbox2, 8)?;
    let rep = verify_triangle(&chat, "Chat")?;
    out.push(SuiteOutcome::from_report(
        "Chat from the box-2 relation matches the embedded Chat rows",
        &rep,
        45,
    ));

    let fhat = fhat_from_a(&a_full, &cbox2, 11)?;
    let rep = verify_triangle(&fhat, "Fhat")?;
    out.push(SuiteOutcome::from_report(
        "Fhat from the box-2 relation matches the embedded Fhat rows",
        &rep,
        36,
    ));

    let bad = chat_fhat_identity(&chat, &fhat);
    out.push(if bad.is_empty() {
        SuiteOutcome::ok("chat_{m,x} = fhat_{m+x+1,x} identity", "computed overlap")
    } else {
        SuiteOutcome::fail("chat_{m,x} = fhat_{m+x+1,x} identity", format!("{bad:?}"))
    });

    // Fhat never exceeds F, and the two agree on every entry with
    // density m/r <= 1: a skew component in the box-2 family but outside
    // D needs at least 4 nodes on 3 axes plus one node per remaining
    // axis, i.e. m >= r+1. Divergence therefore starts exactly at (8,3).
    let f = f_from_a(&a_full, 23)?;
    let mut bad = Vec::new();
    for n in 1..=11usize {
        for r in 0..=n / 2 {
            let m = n - r - 1;
            let (fh, fv) = (fhat.need(n, r)?, f.need(n, r)?);
            if fh > fv {
                bad.push(format!("fhat > f at (n,r)=({n},{r})"));
            }
            if m <= r && fh != fv {
                bad.push(format!("divergence below density 1 at (n,r)=({n},{r})"));
            }
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok(
            "Fhat <= F entrywise, equal wherever the density is at most 1",
            "rows n <= 11",
        )
    } else {
        SuiteOutcome::fail(
            "Fhat <= F entrywise, equal wherever the density is at most 1",
            bad.join(", "),
        )
    });
    let fhat83 = fhat.need(8, 3)?;
    let f83 = f.need(8, 3)?;
    out.push(
        if fhat83 == BigInt::from(57) && f83 == BigInt::from(58) {
            SuiteOutcome::ok(
                "first divergence of Fhat from F at (8,3): 57 vs 58",
                "exact",
            )
        } else {
            SuiteOutcome::fail(
                "first divergence of Fhat from F at (8,3): 57 vs 58",
                format!("fhat={fhat83}, f={f83}"),
            )
        },
    );

    let band = fhat_band(&a_full, &cbox2, 6, 8)?;
    let rep_a = series_box_identity_a(&a_full, &cbox2, &band, 6, 8)?;
    out.push(if rep_a.is_exact() {
        SuiteOutcome::ok("series identity A = Abox2 x Fhat to orders (q^6, t^8)", "exact")
    } else {
        SuiteOutcome::fail(
            "series identity A = Abox2 x Fhat to orders (q^6, t^8)",
            format!("{:?}", rep_a.mismatches),
        )
    });
    let rep_c = series_box_identity_c(&c_gold, &cbox2, &chat, 6, 8)?;
    out.push(if rep_c.is_exact() {
        SuiteOutcome::ok("series identity C = Cbox2 x Chat to orders (q^6, t^8)", "exact")
    } else {
        SuiteOutcome::fail(
            "series identity C = Cbox2 x Chat to orders (q^6, t^8)",
            format!("{:?}", rep_c.mismatches),
        )
    });

    // the box-2 F triangle through the mirrored transform (rows <= 11
    // are derivable from the embedded Cbox2 rows)
    let fbox2 = fbox2_from_embedded_cbox2(11)?;
    let rep = verify_cells("Fbox2", |n, r| if n > 11 { None } else { fbox2.entry(n, r) })?;
    out.push(SuiteOutcome::from_report(
        "Fbox2 by the mirrored transform matches the embedded rows 1..11",
        &rep,
        22,
    ));

    Ok(out)
}

/// Enumeration against the reference tables, desk-scale.
pub fn suite_enumeration(opts: &EnumOptions) -> Result<Vec<SuiteOutcome>> {
    let mut out = Vec::new();

    // p_d(n) for d <= 4, n <= 12
    let mut bad = Vec::new();
    let mut matched = 0usize;
    for d in 0..=4usize {
        let counts = count_pd(d, 12, None, opts)?;
        for (i, v) in counts.iter().enumerate() {
            let n = i + 1;
            let got = BigInt::from(v.clone());
            let want = match d {
                0 => BigInt::one(),
                _ => match golden("pd")?.get(n, d) {
                    Some(v) => v.clone(),
                    None => continue,
                },
            };
            if got == want {
                matched += 1;
            } else {
                bad.push(format!("p_{d}({n}): {got} != {want}"));
            }
        }
    }
    out.push(if bad.is_empty() && matched >= 60 {
        SuiteOutcome::ok(
            "enumeration reproduces p_d(n) for d <= 4, n <= 12",
            format!("{matched} values"),
        )
    } else {
        SuiteOutcome::fail(
            "enumeration reproduces p_d(n) for d <= 4, n <= 12",
            bad.join("; "),
        )
    });

    // A rows 1..13, all columns
    let a = a_triangle_by_enumeration(13, None, opts)?;
    let rep = verify_cells("A", |n, r| {
        if n > 13 {
            return None;
        }
        a.entry(n, r)
    })?;
    let diag_ok = (2..=13usize).all(|n| a.need(n, n - 1).unwrap() == BigInt::one());
    out.push(if rep.is_clean() && rep.matched >= 90 && diag_ok {
        SuiteOutcome::ok(
            "enumeration reproduces A rows 1..13 (all columns)",
            format!("{} printed entries + unit diagonal", rep.matched),
        )
    } else {
        SuiteOutcome::fail(
            "enumeration reproduces A rows 1..13 (all columns)",
            rep.to_string(),
        )
    });

    // C rows 0..5, all columns (largest run: ambient 10, depth 5)
    let c = c_triangle_by_enumeration(5, None, opts)?;
    let rep = verify_cells("C", |m, x| if m > 5 { None } else { c.entry(m, x) })?;
    out.push(if rep.is_clean() && rep.matched >= 36 {
        SuiteOutcome::ok(
            "enumeration reproduces C rows 0..5",
            format!("{} entries", rep.matched),
        )
    } else {
        SuiteOutcome::fail("enumeration reproduces C rows 0..5", rep.to_string())
    });

    // rooted-forest refinement for m <= 5: Cayley per alpha plus diagonal
    let mut bad = Vec::new();
    for m in 1..=5usize {
        let counts = count_forests(m, opts)?;
        if !counts[0].is_zero() {
            bad.push(format!("m={m}: alpha=0 slot nonzero"));
        }
        let mut total = BigInt::zero();
        for alpha in 1..=m {
            let got = BigInt::from(counts[alpha].clone());
            let want = binomial(m - 1, alpha - 1) * BigInt::from(m as u64).pow((m - alpha) as u32);
            if got != want {
                bad.push(format!("m={m}, alpha={alpha}: {got} != {want}"));
            }
            total += got;
        }
        let diag = BigInt::from(m as u64 + 1).pow((m - 1) as u32);
        if total != diag {
            bad.push(format!("m={m}: sum {total} != diagonal {diag}"));
        }
        match golden("F")?.get(2 * m + 1, m) {
            Some(v) if *v == diag => {}
            other => bad.push(format!("m={m}: embedded diagonal {other:?}")),
        }
    }
    out.push(if bad.is_empty() {
        SuiteOutcome::ok(
            "forest refinement matches C(m-1,a-1) m^(m-a) and the F diagonal for m <= 5",
            "15 classes",
        )
    } else {
        SuiteOutcome::fail(
            "forest refinement matches C(m-1,a-1) m^(m-a) and the F diagonal for m <= 5",
            bad.join("; "),
        )
    });

    // box-2 C rows 0..6
    let cbox2 = c_triangle_by_enumeration(6, Some(2), opts)?;
    let rep = verify_cells("Cbox2", |m, x| if m > 6 { None } else { cbox2.entry(m, x) })?;
    out.push(if rep.is_clean() && rep.matched >= 49 {
        SuiteOutcome::ok(
            "box-2 enumeration reproduces Cbox2 rows 0..6",
            format!("{} entries", rep.matched),
        )
    } else {
        SuiteOutcome::fail(
            "box-2 enumeration reproduces Cbox2 rows 0..6",
            rep.to_string(),
        )
    });

    // box-2 F rows 1..14
    let fbox2 = f_triangle_by_enumeration(14, Some(2), opts)?;
    let rep = verify_cells("Fbox2", |n, r| if n > 14 { None } else { fbox2.entry(n, r) })?;
    let first_nonzero_ok = fbox2.need(8, 3).unwrap() == BigInt::one()
        && fbox2.need(7, 3).unwrap().is_zero()
        && fbox2.need(8, 2).unwrap().is_zero();
    // rows 1..14 of the embedded table hold 41 cells
    out.push(if rep.is_clean() && rep.matched >= 41 && first_nonzero_ok {
        SuiteOutcome::ok(
            "box-2 enumeration reproduces Fbox2 rows 1..14 (first nonzero at n=8)",
            format!("{} entries", rep.matched),
        )
    } else {
        SuiteOutcome::fail(
            "box-2 enumeration reproduces Fbox2 rows 1..14 (first nonzero at n=8)",
            rep.to_string(),
        )
    });

    // F rows 1..11 by enumeration against the embedded table
    let f = f_triangle_by_enumeration(11, None, opts)?;
    let rep = verify_cells("F", |n, r| if n > 11 { None } else { f.entry(n, r) })?;
    out.push(if rep.is_clean() && rep.matched >= 25 {
        SuiteOutcome::ok(
            "enumeration reproduces F rows 1..11",
            format!("{} entries", rep.matched),
        )
    } else {
        SuiteOutcome::fail("enumeration reproduces F rows 1..11", rep.to_string())
    });

    // the box-2 tree is finite: column r=3 ends at m = 2^3 - 3 - 1 = 4
    let col = box_b_column(2, 3, 6, opts)?;
    let total: BigInt = col.iter().cloned().map(BigInt::from).sum();
    let ok = col[4] == 1u32.into()
        && col[5].is_zero()
        && col[6].is_zero()
        && total == BigInt::from(9); // 1+3+3+1+1: every box-2 diagram over mu_3
    out.push(if ok {
        SuiteOutcome::ok(
            "box-2 column r=3 terminates at m = 2^3-3-1 = 4 with final entry 1",
            format!("column {:?}", col.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        )
    } else {
        SuiteOutcome::fail(
            "box-2 column r=3 terminates at m = 2^3-3-1 = 4 with final entry 1",
            format!("column {:?}", col.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        )
    });

    // general-box column: box-3 one-dimensional diagrams
    let col = box_b_column(3, 1, 3, opts)?;
    let want: Vec<BigInt> = [1, 1, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
    let got: Vec<BigInt> = col.iter().cloned().map(BigInt::from).collect();
    out.push(if got == want {
        SuiteOutcome::ok("box-3 column r=1 is 1, 1 and terminates", "exact")
    } else {
        SuiteOutcome::fail(
            "box-3 column r=1 is 1, 1 and terminates",
            format!("{got:?}"),
        )
    });

    Ok(out)
}

/// Everything: tables, transforms, enumeration.
pub fn suite_all(opts: &EnumOptions) -> Result<Vec<SuiteOutcome>> {
    let mut out = suite_tables()?;
    out.extend(suite_transforms()?);
    out.extend(suite_enumeration(opts)?);
    Ok(out)
}

/// Fbox2 rows derivable from the embedded Cbox2 rows via the transform
/// mirror (full rows need a^box2 with m <= 10, so n <= 11).
pub fn fbox2_from_embedded_cbox2(n_max: usize) -> Result<crate::triangle::Triangle> {
    let cbox2 = golden("Cbox2")?.triangle()?;
    let abox2 = crate::boxext::abox2_from_cbox2(&cbox2, n_max)?;
    f_from_a_kind(&abox2, n_max, TriangleKind::FBox2)
}
