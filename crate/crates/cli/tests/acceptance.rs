//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nimtri::applications::{census, census_closed_form_check, winning_moves, Tally};
use nimtri::mex::{exclusion_set, greedy_minimal_table, mex_oracle, verify_table_equals_xor};
use nimtri::triangle::{case_table_lookup, classify_triple, CaseOutcome};
use nimtri::{advise_move, MoveAdvice, Natural, NimPosition, TriangleClass, VertexStatus};
use nimtri_cli::{run_with, Config, EXIT_OK};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

/// Non-flat triangles over [0, 64)^3 have exactly 1 or 3 large vertices.
fn lemma2_exhaustive() -> Outcome {
    let start = Instant::now();
    let values: Vec<Natural> = (0..64).map(nat).collect();
    let mut checked = 0u64;
    let mut violations = 0u64;
    for a in &values {
        for b in &values {
            for c in &values {
                let cl = classify_triple(a, b, c);
                checked += 1;
                let flat = cl.statuses == [VertexStatus::Aligned; 3];
                let ok = if flat {
                    cl.class == TriangleClass::Flat
                } else {
                    matches!(cl.large_count(), 1 | 3)
                        && !cl.statuses.contains(&VertexStatus::Aligned)
                };
                violations += !ok as u64;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(checked == 262_144, || format!("checked {checked} triples"))?;
    ensure(violations == 0, || format!("{violations} violations"))?;
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("{checked} triples, 0 violations, {elapsed:.2?}"))
}

/// With c = a ^ b every vertex is aligned, for all a, b < 128.
fn lemma1_exhaustive() -> Outcome {
    let mut violations = 0u64;
    for a in 0..128u64 {
        for b in 0..128u64 {
            let cl = classify_triple(&nat(a), &nat(b), &nat(a ^ b));
            if cl.class != TriangleClass::Flat || cl.statuses != [VertexStatus::Aligned; 3] {
                violations += 1;
            }
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok("16384 pairs, 0 violations".into())
}

/// Lookup at the discriminant bit equals the computed statuses on [0, 32)^3.
fn case_table_consistency() -> Outcome {
    let mut non_flat = 0u64;
    let mut violations = 0u64;
    for a in 0..32u64 {
        for b in 0..32u64 {
            for c in 0..32u64 {
                let (na, nb, nc) = (nat(a), nat(b), nat(c));
                let cl = classify_triple(&na, &nb, &nc);
                let Some(j) = cl.discriminant else { continue };
                non_flat += 1;
                match case_table_lookup(na.bit(j), nb.bit(j), nc.bit(j)) {
                    CaseOutcome::Statuses(s) if s == cl.statuses => {}
                    _ => violations += 1,
                }
            }
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!("{non_flat} non-flat triples, 0 violations"))
}

/// mex(X(a, b)) == a ^ b for a, b < 128, and every c < a ^ b lies in X for
/// a, b < 64.
fn mex_equivalence() -> Outcome {
    let mut violations = 0u64;
    for a in 0..128u64 {
        for b in 0..128u64 {
            let m = mex_oracle(&nat(a), &nat(b)).map_err(|e| e.to_string())?;
            violations += (m != nat(a) ^ nat(b)) as u64;
        }
    }
    let mut covered = 0u64;
    for a in 0..64u64 {
        for b in 0..64u64 {
            let set = exclusion_set(&nat(a), &nat(b)).map_err(|e| e.to_string())?;
            for c in 0..(a ^ b) {
                covered += 1;
                violations += !set.contains(&nat(c)) as u64;
            }
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!(
        "16384 pairs, {covered} smaller candidates excluded, 0 violations"
    ))
}

/// Greedy 256 x 256 table is Latin and equals XOR.
fn greedy_witness() -> Outcome {
    let start = Instant::now();
    let table = greedy_minimal_table(256);
    let latin = table.is_latin();
    let xor = verify_table_equals_xor(&table);
    let elapsed = start.elapsed();
    ensure(latin, || "table is not Latin".into())?;
    xor.map_err(|m| m.to_string())?;
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("65536 entries equal XOR, {elapsed:.2?}"))
}

/// Advice on [0, 32)^3 reaches a zero Nim sum iff one is reachable;
/// winning_moves has 0, 1 or 3 entries.
fn advisor_soundness() -> Outcome {
    let mut violations = 0u64;
    for a in 0..32u64 {
        for b in 0..32u64 {
            for c in 0..32u64 {
                let piles = [a, b, c];
                let reachable = (0..3).any(|i| {
                    (0..piles[i]).any(|s| {
                        let mut next = piles;
                        next[i] = s;
                        next[0] ^ next[1] ^ next[2] == 0
                    })
                });
                let pos = NimPosition::new(piles);
                let advice = advise_move(&pos).map_err(|e| e.to_string())?;
                let ok = match &advice {
                    MoveAdvice::NoWinningMove => !reachable,
                    MoveAdvice::Winning { pile, new_size } => {
                        reachable && new_size < &pos.piles[*pile] && pos.apply(&advice).is_losing()
                    }
                };
                let count = winning_moves(&pos).map_err(|e| e.to_string())?.len();
                violations += (!ok || !matches!(count, 0 | 1 | 3)) as u64;
            }
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok("32768 positions, 0 violations".into())
}

fn brute_census(k: u32) -> Tally {
    let n = 1u64 << k;
    let mut t = Tally::default();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b ^ c {
                    t.flat += 1;
                } else if a > b ^ c && b > a ^ c && c > a ^ b {
                    t.tight += 1;
                } else {
                    t.loose += 1;
                }
            }
        }
    }
    t
}

fn census_counts() -> Outcome {
    let expect = |k: u32, flat, tight, loose| -> Result<(), String> {
        let want = Tally { flat, tight, loose };
        let brute = brute_census(k);
        ensure(brute == want, || format!("brute force k={k}: {brute:?}"))?;
        let got = census(k).map_err(|e| e.to_string())?.tally;
        ensure(got == want, || format!("census({k}) = {got:?}"))
    };
    expect(1, 4, 1, 3)?;
    expect(2, 16, 12, 36)?;
    for k in 1..=6 {
        let ok = census_closed_form_check(k).map_err(|e| e.to_string())?;
        ensure(ok, || format!("closed form fails at k={k}"))?;
    }
    let report = census(6).map_err(|e| e.to_string())?;
    within(report.elapsed, Duration::from_secs(10))?;
    Ok(format!(
        "k=1,2 match brute force; closed form holds k=1..6; census(6) {:.2?}",
        report.elapsed
    ))
}

#[allow(clippy::eq_op)]
fn group_properties() -> Outcome {
    let values: Vec<Natural> = (0..256).map(nat).collect();
    let zero = Natural::ZERO;
    let mut violations = 0u64;
    for a in &values {
        violations += (a ^ &zero != *a || !(a ^ a).is_zero()) as u64;
        for b in &values {
            let ab = a ^ b;
            violations += (ab != b ^ a) as u64;
            violations += (ab > a + b || a.abs_diff(b) > ab) as u64;
            for c in &values {
                violations += (&ab ^ c != a ^ &(b ^ c)) as u64;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e696d);
    let mut wide = || {
        let limbs = rng.gen_range(2..=4);
        let mut v: Vec<u64> = (0..limbs).map(|_| rng.gen()).collect();
        *v.last_mut().unwrap() |= 1;
        Natural::from_limbs(v)
    };
    for _ in 0..10_000 {
        let (a, b, c) = (wide(), wide(), wide());
        let ab = &a ^ &b;
        let ok = ab == &b ^ &a
            && &ab ^ &c == &a ^ &(&b ^ &c)
            && &a ^ &zero == a
            && (&a ^ &a).is_zero()
            && ab <= &a + &b
            && a.abs_diff(&b) <= ab
            && a.bit_len() > 64;
        violations += !ok as u64;
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok("exhaustive below 2^8, 10000 wide cases, 0 violations".into())
}

fn render_golden() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("r{i}.pgm"));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(
            [
                "nimtri",
                "render",
                "1",
                "0",
                "--out",
                path.to_str().unwrap(),
            ],
            Config::default(),
            &mut out,
            &mut err,
        );
        ensure(code == EXIT_OK, || {
            String::from_utf8_lossy(&err).into_owned()
        })?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let header = b"P5\n2 2\n255\n";
    ensure(files[0].starts_with(header), || "bad header".into())?;
    ensure(files[0][header.len()..] == [255, 85, 85, 255], || {
        format!("pixels {:?}", &files[0][header.len()..])
    })?;
    ensure(files[0] == files[1], || "runs differ".into())?;
    Ok("pixels [255, 85, 85, 255], runs identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 lemma2 exhaustive [0,2^6)^3", lemma2_exhaustive),
        ("2 lemma1 exhaustive a,b<2^7", lemma1_exhaustive),
        ("3 case-table consistency [0,2^5)^3", case_table_consistency),
        ("4 mex oracle equivalence", mex_equivalence),
        ("5 greedy minimality witness n=256", greedy_witness),
        ("6 advisor soundness [0,2^5)^3", advisor_soundness),
        ("7 census counts and closed form", census_counts),
        ("8 group/property suite", group_properties),
        ("9 cli render golden", render_golden),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
