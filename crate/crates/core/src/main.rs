//! Command-line entry point: every module operation is reachable from a
//! subcommand, with machine-readable JSON/CSV/DOT output. Exit status 0 on
//! success, 1 on domain errors (structured JSON on stderr), 2 on usage
//! errors (clap).

use clap::{Parser, Subcommand};
use dartin::canonical::to_canonical;
use dartin::conjugacy::{
    brute_force_conjugate, conj_representative, cyclic_permutations, cyclically_reduce,
    is_conjugate, pcl, split_cyclic_permutations,
};
use dartin::geodesic::{
    classify_geodesic, enumerate_geodesics, geodesic_length, is_geodesic, reduce_to_geodesic,
};
use dartin::growth::{
    asymptotics_report, conj_class_counts, denominator_polynomial, series_coeffs,
    smallest_positive_root, sphere_sizes, Family, IntPolynomial,
};
use dartin::lang::{
    build_conjgeo_dfa, dfa_accepts, dfa_count, dfa_to_dot, fellow_travel_distance, fftp_check,
    is_conjugacy_geodesic,
};
use dartin::oracle::{oracle_equal, Ball, ConjugacyPartition};
use dartin::words::{parse_word, GroupParams, Letter, Word};
use serde_json::json;

#[derive(Parser)]
#[command(name = "dartin", version, about = "Dihedral Artin groups over the free-product generators: words, geodesics, conjugacy, growth")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical form of a word (JSON).
    Normalize {
        #[arg(long)]
        m: i64,
        word: String,
    },
    /// Geodesic representative, length, and optionally all geodesics.
    Geodesic {
        #[arg(long)]
        m: i64,
        word: String,
        /// Enumerate every geodesic of the element.
        #[arg(long)]
        enumerate: bool,
        /// Length cap for enumeration.
        #[arg(long, default_value_t = 20)]
        cap: i64,
    },
    /// Classify a geodesic word by type (JSON); optionally emit the split
    /// cyclic permutation orbit.
    Classify {
        #[arg(long)]
        m: i64,
        word: String,
        #[arg(long)]
        orbit: bool,
    },
    /// Conjugacy operations.
    Conj {
        #[command(subcommand)]
        cmd: ConjCmd,
    },
    /// Sphere sizes (elements) or conjugacy class counts (CSV n,count), or
    /// the full asymptotics report (--report).
    Growth {
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 10)]
        max_n: i64,
        #[arg(long)]
        classes: bool,
        #[arg(long)]
        report: bool,
        #[arg(long, default_value_t = 14)]
        cap: i64,
    },
    /// Taylor coefficients of 1/denominator (CSV n,coeff).
    Series {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long, default_value_t = 20)]
        n: i64,
    },
    /// Smallest positive root of a denominator polynomial (JSON).
    Root {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// ConjGeo automaton: emit DOT/JSON, test a word, or count accepted
    /// words per length (CSV).
    Automaton {
        #[arg(long)]
        m: i64,
        #[arg(long, default_value = "json")]
        emit: String,
        #[arg(long)]
        count: Option<i64>,
        #[arg(long)]
        word: Option<String>,
    },
    /// FFTP certification report, or the fellow-traveler distance of a
    /// word pair.
    Fftp {
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 6)]
        max_len: i64,
        #[arg(long, default_value_t = 8)]
        cap: i64,
        words: Vec<String>,
    },
    /// Permutation conjugacy length of two geodesics.
    Pcl {
        #[arg(long)]
        m: i64,
        w1: String,
        w2: String,
    },
    /// Oracle-equivalence suite at reduced caps.
    Selftest {
        #[arg(long)]
        m: Option<i64>,
    },
}

#[derive(Subcommand)]
enum ConjCmd {
    /// Canonical conjugacy-class key (JSON).
    Key {
        #[arg(long)]
        m: i64,
        word: String,
    },
    /// Conjugacy test; --brute uses the breadth-first conjugator oracle.
    Test {
        #[arg(long)]
        m: i64,
        w1: String,
        w2: String,
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        radius: Option<i64>,
    },
    /// Permutation conjugacy length.
    Pcl {
        #[arg(long)]
        m: i64,
        w1: String,
        w2: String,
    },
}

/// Round to 15 significant digits for stable numeric output.
fn sig15(x: f64) -> f64 {
    format!("{x:.14e}").parse().unwrap()
}

fn domain_error(msg: impl std::fmt::Display) -> i32 {
    eprintln!("{}", json!({ "error": msg.to_string() }));
    1
}

fn parse(m: i64, s: &str) -> Result<(GroupParams, Word), String> {
    let params = GroupParams::new(m).map_err(|e| e.to_string())?;
    let w = parse_word(s, Some(params)).map_err(|e| e.to_string())?;
    Ok((params, w))
}

fn family_params(family: &str, k: i64) -> Result<(Family, GroupParams), String> {
    let fam = Family::parse(family).ok_or_else(|| format!("unknown family {family:?}"))?;
    let m = match fam {
        Family::POdd | Family::QOdd => 2 * k + 1,
        _ => 4 * k,
    };
    GroupParams::new(m).map(|p| (fam, p)).map_err(|e| e.to_string())
}

fn run() -> i32 {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Normalize { m, word } => match parse(m, &word) {
            Ok((params, w)) => {
                println!("{}", serde_json::to_string(&to_canonical(&w, params)).unwrap());
                0
            }
            Err(e) => domain_error(e),
        },
        Cmd::Geodesic { m, word, enumerate, cap } => match parse(m, &word) {
            Ok((params, w)) => {
                let e = to_canonical(&w, params);
                let geo = reduce_to_geodesic(&w, params);
                let mut out = json!({
                    "input": w.to_string(),
                    "input_length": w.len(),
                    "geodesic": geo.to_string(),
                    "length": geodesic_length(&e, params),
                    "is_geodesic": is_geodesic(&w, params),
                });
                if enumerate {
                    match enumerate_geodesics(&e, params, cap) {
                        Ok(all) => {
                            out["geodesics"] = json!(all
                                .iter()
                                .map(|g| g.to_string())
                                .collect::<Vec<_>>());
                        }
                        Err(e) => return domain_error(e),
                    }
                }
                println!("{out}");
                0
            }
            Err(e) => domain_error(e),
        },
        Cmd::Classify { m, word, orbit } => match parse(m, &word) {
            Ok((params, w)) => match classify_geodesic(&w, params) {
                Ok(gw) => {
                    let mut out = json!({
                        "word": gw.word.to_string(),
                        "type": gw.gtype.to_string(),
                        "unique": gw.gtype.is_unique_type(),
                        "view": gw.view.iter().map(|&(g, e)| {
                            json!([match g { dartin::words::Gen::X => "x", _ => "y" }, e])
                        }).collect::<Vec<_>>(),
                        "central": gw.central,
                    });
                    if let Some(sv) = &gw.split {
                        out["split"] = json!({
                            "specials": sv.specials,
                            "blocks": sv.blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                            "tau1": sv.tau1,
                            "tau2": sv.tau2,
                            "j": sv.j,
                        });
                        if orbit {
                            match split_cyclic_permutations(&gw) {
                                Ok(words) => {
                                    out["orbit"] = json!(words
                                        .iter()
                                        .map(|x| x.to_string())
                                        .collect::<Vec<_>>());
                                }
                                Err(e) => return domain_error(e),
                            }
                        }
                    } else if orbit {
                        return domain_error(format!(
                            "type {} has no split view",
                            gw.gtype
                        ));
                    }
                    println!("{out}");
                    0
                }
                Err(e) => domain_error(e),
            },
            Err(e) => domain_error(e),
        },
        Cmd::Conj { cmd } => match cmd {
            ConjCmd::Key { m, word } => match parse(m, &word) {
                Ok((params, w)) => {
                    let key = conj_representative(&w, params);
                    let (tau1, tau2, j) = classify_geodesic(&key.rep, params)
                        .ok()
                        .and_then(|gw| gw.split)
                        .map_or((None, None, None), |sv| {
                            (Some(sv.tau1), Some(sv.tau2), sv.j)
                        });
                    println!(
                        "{}",
                        json!({
                            "rep": key.rep.to_string(),
                            "length": key.length,
                            "central": key.central,
                            "cyclic_reduction": cyclically_reduce(&w, params).to_string(),
                            "rotations": cyclic_permutations(&key.rep).len(),
                            "tau1": tau1,
                            "tau2": tau2,
                            "j": j,
                        })
                    );
                    0
                }
                Err(e) => domain_error(e),
            },
            ConjCmd::Test { m, w1, w2, brute, radius } => {
                let (params, u) = match parse(m, &w1) {
                    Ok(x) => x,
                    Err(e) => return domain_error(e),
                };
                let v = match parse_word(&w2, Some(params)) {
                    Ok(v) => v,
                    Err(e) => return domain_error(e.to_string()),
                };
                let result = if brute {
                    let r = radius.unwrap_or(
                        (u.len() + v.len()) as i64 + 2 * params.delta_len(),
                    );
                    match brute_force_conjugate(&u, &v, params, r) {
                        Ok(b) => b,
                        Err(e) => return domain_error(e),
                    }
                } else {
                    is_conjugate(&u, &v, params)
                };
                println!("{result}");
                0
            }
            ConjCmd::Pcl { m, w1, w2 } => run_pcl(m, &w1, &w2),
        },
        Cmd::Growth { m, max_n, classes, report, cap } => {
            let params = match GroupParams::new(m) {
                Ok(p) => p,
                Err(e) => return domain_error(e),
            };
            if report {
                return match asymptotics_report(params, max_n, cap) {
                    Ok(mut r) => {
                        r.ratio_cs = r.ratio_cs.iter().map(|&x| sig15(x)).collect();
                        r.ratio_ncs = r.ratio_ncs.iter().map(|&x| sig15(x)).collect();
                        r.rate_s = r.rate_s.iter().map(|&x| sig15(x)).collect();
                        r.rate_c = r.rate_c.iter().map(|&x| sig15(x)).collect();
                        r.series_root = r.series_root.map(sig15);
                        println!("{}", serde_json::to_string(&r).unwrap());
                        0
                    }
                    Err(e) => domain_error(e),
                };
            }
            let counts = if classes {
                conj_class_counts(params, max_n, cap)
            } else {
                sphere_sizes(params, max_n, cap)
            };
            match counts {
                Ok(c) => {
                    println!("n,count");
                    for (n, v) in c.counts.iter().enumerate() {
                        println!("{n},{v}");
                    }
                    0
                }
                Err(e) => domain_error(e),
            }
        }
        Cmd::Series { family, k, j, n } => {
            let (fam, params) = match family_params(&family, k) {
                Ok(x) => x,
                Err(e) => return domain_error(e),
            };
            let den = match denominator_polynomial(fam, params, j) {
                Ok(d) => d,
                Err(e) => return domain_error(e),
            };
            match series_coeffs(&den, &IntPolynomial::new(vec![1]), n) {
                Ok(coeffs) => {
                    println!("n,coeff");
                    for (i, c) in coeffs.iter().enumerate() {
                        println!("{i},{c}");
                    }
                    0
                }
                Err(e) => domain_error(e),
            }
        }
        Cmd::Root { family, k, j, tol } => {
            let (fam, params) = match family_params(&family, k) {
                Ok(x) => x,
                Err(e) => return domain_error(e),
            };
            let den = match denominator_polynomial(fam, params, j) {
                Ok(d) => d,
                Err(e) => return domain_error(e),
            };
            match smallest_positive_root(&den, tol) {
                Ok(r) => {
                    println!(
                        "{}",
                        json!({
                            "polynomial": den.to_string(),
                            "value": sig15(r.value),
                            "growth_rate": sig15(1.0 / r.value),
                            "tolerance": r.tolerance,
                            "bracket": [sig15(r.bracket.0), sig15(r.bracket.1)],
                        })
                    );
                    0
                }
                Err(e) => domain_error(e),
            }
        }
        Cmd::Automaton { m, emit, count, word } => {
            let params = match GroupParams::new(m) {
                Ok(p) => p,
                Err(e) => return domain_error(e),
            };
            let dfa = build_conjgeo_dfa(params);
            if let Some(w) = word {
                return match parse_word(&w, Some(params)) {
                    Ok(w) => {
                        println!("{}", dfa_accepts(&dfa, &w));
                        0
                    }
                    Err(e) => domain_error(e.to_string()),
                };
            }
            if let Some(n) = count {
                println!("n,count");
                for i in 0..=n {
                    println!("{i},{}", dfa_count(&dfa, i));
                }
                return 0;
            }
            match emit.as_str() {
                "dot" => print!("{}", dfa_to_dot(&dfa)),
                "json" => println!("{}", serde_json::to_string(&dfa).unwrap()),
                other => return domain_error(format!("unknown emit format {other:?}")),
            }
            0
        }
        Cmd::Fftp { m, max_len, cap, words } => {
            let params = match GroupParams::new(m) {
                Ok(p) => p,
                Err(e) => return domain_error(e),
            };
            if words.len() == 2 {
                let u = match parse_word(&words[0], Some(params)) {
                    Ok(w) => w,
                    Err(e) => return domain_error(e.to_string()),
                };
                let v = match parse_word(&words[1], Some(params)) {
                    Ok(w) => w,
                    Err(e) => return domain_error(e.to_string()),
                };
                println!(
                    "{}",
                    json!({ "distance": fellow_travel_distance(&u, &v, params) })
                );
                return 0;
            }
            if !words.is_empty() {
                return domain_error("expected zero or two words");
            }
            match fftp_check(params, max_len, cap) {
                Ok(r) => {
                    println!("{}", serde_json::to_string(&r).unwrap());
                    0
                }
                Err(e) => domain_error(e),
            }
        }
        Cmd::Pcl { m, w1, w2 } => run_pcl(m, &w1, &w2),
        Cmd::Selftest { m } => selftest(m),
    }
}

fn run_pcl(m: i64, w1: &str, w2: &str) -> i32 {
    let (params, u) = match parse(m, w1) {
        Ok(x) => x,
        Err(e) => return domain_error(e),
    };
    let v = match parse_word(w2, Some(params)) {
        Ok(v) => v,
        Err(e) => return domain_error(e.to_string()),
    };
    match pcl(&u, &v, params) {
        Ok(d) => {
            println!("{}", json!({ "pcl": d }));
            0
        }
        Err(e) => domain_error(e),
    }
}

/// All freely reduced words of length at most `n`.
fn short_words(n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut i = 0;
    while i < out.len() {
        let w = out[i].clone();
        if w.len() < n {
            for l in Letter::ALL {
                if w.0.last().is_some_and(|&last| last == l.inverse()) {
                    continue;
                }
                let mut w2 = w.clone();
                w2.0.push(l);
                out.push(w2);
            }
        }
        i += 1;
    }
    out
}

fn selftest(m: Option<i64>) -> i32 {
    let ms = m.map_or(vec![3, 4, 5], |m| vec![m]);
    let mut failures = 0;
    let mut check = |name: &str, m: i64, ok: bool| {
        println!("selftest {name} m={m}: {}", if ok { "ok" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };
    for &m in &ms {
        let params = match GroupParams::new(m) {
            Ok(p) => p,
            Err(e) => return domain_error(e),
        };
        let words = short_words(4);
        // Word problem vs the independent normalizer.
        let mut ok = true;
        for u in &words {
            for v in &words {
                if dartin::canonical::elements_equal(u, v, params)
                    != oracle_equal(u, v, params)
                {
                    ok = false;
                }
            }
        }
        check("word-problem", m, ok);
        // Geodesic length vs breadth-first distances.
        let ball = Ball::new(params, 5);
        let mut ok = true;
        for (_, &(dist, ref w)) in ball.elements.iter() {
            if geodesic_length(&to_canonical(w, params), params) != dist {
                ok = false;
            }
        }
        check("geodesic-length", m, ok);
        // Conjugacy vs the union-find partition.
        let part = ConjugacyPartition::new(params, 7);
        let mut ok = true;
        for u in &words {
            for v in &words {
                if u.len() <= 3 && v.len() <= 3 {
                    if let Some(same) = part.same_class(u, v, params) {
                        if is_conjugate(u, v, params) != same {
                            ok = false;
                        }
                    }
                }
            }
        }
        check("conjugacy", m, ok);
        // ConjGeo automaton vs the direct predicate.
        let dfa = build_conjgeo_dfa(params);
        let mut ok = true;
        for w in &short_words(5) {
            if dfa_accepts(&dfa, w) != is_conjugacy_geodesic(w, params) {
                ok = false;
            }
        }
        check("conjgeo-dfa", m, ok);
    }
    if failures > 0 {
        1
    } else {
        0
    }
}

fn main() {
    std::process::exit(run());
}
