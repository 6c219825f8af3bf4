use std::path::{Path, PathBuf};
use std::process::ExitCode;

use powerful::clutter::PostCheckFailure;
use powerful::element::classify_all;
use powerful::enumerate::{
    census_with, check_conjecture_coloop_on, check_conjecture_projection_on, diamond_family,
    family_seeds, gray_map, known_counts, read_cache, write_cache, CensusConfig, CensusReport,
};
use powerful::ops::{
    bullet, contract, delete, diamond, direct_sum, disjunctive_closure, extend, mutual_framing,
    puncture, Extension,
};
use powerful::zeta::{first_failure_with, is_power_of_two, is_powerful_with, PowerWitness};
use powerful::{
    canonical_form, dim, is_linear, min_members, rank, BinarySet, ElementKind,
    ReconstructionOutcome, Word,
};
use serde_json::{json, Value};

use crate::format::{
    element_list, elements, limits, parse_elements, print_json, print_set, read_set, read_set_file,
    read_z4, set_json,
};
use crate::{Cli, Command, Conjecture, ExtensionKind, Failure, Operation, Outcome};

/// Largest order for which `rank` lists every subset.
const RANK_TABLE_MAX_ORDER: usize = 12;
/// Orders above this need `--extended`.
const DEFAULT_CENSUS_ORDER: usize = 5;

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Check { file } => check(&file, json),
        Command::Rank { file, subsets } => rank_table(&file, &subsets, json),
        Command::Op {
            operation,
            files,
            element,
            kind,
            partner,
            verify,
        } => op(
            operation,
            &files,
            element,
            kind,
            partner.as_deref(),
            verify,
            json,
        ),
        Command::Census {
            order,
            cache,
            threads,
            extended,
            expect_paper,
            reps,
        } => census(order, cache, threads, extended, expect_paper, reps, json),
        Command::Reconstruct { file, order } => reconstruct(&file, order, json),
        Command::Conjecture {
            which,
            order,
            extended,
        } => conjecture(which, order, extended, json),
        Command::Family {
            seeds,
            rounds,
            members,
        } => family(&seeds, rounds, members, json),
        Command::Graymap { file, check } => graymap(&file, check, json),
    }
}

fn witness_json(w: Option<PowerWitness>) -> Value {
    match w {
        Some(w) => json!({ "x": element_list(w.x), "count": w.count }),
        None => Value::Null,
    }
}

fn kind_json(e: usize, k: ElementKind, order: usize) -> Value {
    let mut v = json!({ "element": e, "kind": k.name() });
    if let ElementKind::NearFrame { partner } = k {
        v["partner"] = json!(partner.to_text(order));
    }
    v
}

fn check(file: &Path, json: bool) -> Outcome {
    let set = read_set(file)?;
    let failure = first_failure_with(&set, &limits()?)?;
    let powerful = failure.is_none();
    let linear = is_linear(&set);
    let dimension = dim(&set).ok();
    let kinds = classify_all(&set);
    if json {
        let elements: Vec<Value> = kinds
            .iter()
            .enumerate()
            .map(|(i, &k)| kind_json(i + 1, k, set.order()))
            .collect();
        print_json(json!({
            "command": "check",
            "order": set.order(),
            "size": set.len(),
            "powerful": powerful,
            "linear": linear,
            "dim": dimension,
            "first_failure": witness_json(failure),
            "elements": elements,
        }));
    } else {
        println!("order {}", set.order());
        println!("size {}", set.len());
        println!("powerful {}", yes_no(powerful));
        println!("linear {}", yes_no(linear));
        match dimension {
            Some(d) => println!("dim {d}"),
            None => println!("dim undefined"),
        }
        if let Some(w) = failure {
            println!("first failure X={} count {}", elements(w.x), w.count);
        }
        for (i, k) in kinds.iter().enumerate() {
            match k {
                ElementKind::NearFrame { partner } => {
                    println!(
                        "element {} near-frame {}",
                        i + 1,
                        partner.to_text(set.order())
                    )
                }
                _ => println!("element {} {}", i + 1, k.name()),
            }
        }
    }
    Ok(verdict(powerful))
}

fn rank_table(file: &Path, subsets: &[String], json: bool) -> Outcome {
    let set = read_set(file)?;
    let n = set.order();
    let xs: Vec<Word> = if subsets.is_empty() {
        if n > RANK_TABLE_MAX_ORDER {
            return Err(Failure(format!(
                "order {n} is too large for a full table; pass --x"
            )));
        }
        let mut all: Vec<u32> = (0..1u32 << n).collect();
        all.sort_by_key(|x| (x.count_ones(), *x));
        all.into_iter().map(Word).collect()
    } else {
        subsets
            .iter()
            .map(|s| parse_elements(s, n))
            .collect::<Result<_, _>>()?
    };
    let mut rows = Vec::with_capacity(xs.len());
    let mut all_exact = true;
    for x in xs {
        let r = rank(&set, x)?;
        all_exact &= r.exact_log2.is_some();
        rows.push((x, r));
    }
    if json {
        let entries: Vec<Value> = rows
            .iter()
            .map(|(x, r)| {
                json!({
                    "x": element_list(*x),
                    "total": r.total,
                    "zeros": r.zeros,
                    "exact_log2": r.exact_log2,
                })
            })
            .collect();
        print_json(
            json!({ "command": "rank", "order": n, "ranks": entries, "all_exact": all_exact }),
        );
    } else {
        for (x, r) in &rows {
            match r.exact_log2 {
                Some(v) => println!("{} {v}", elements(*x)),
                None => println!("{} log2({}/{})", elements(*x), r.total, r.zeros),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn arity(operation: Operation) -> usize {
    match operation {
        Operation::DirectSum
        | Operation::MutualFraming
        | Operation::Bullet
        | Operation::Diamond => 2,
        _ => 1,
    }
}

fn need_element(element: Option<usize>) -> Result<usize, Failure> {
    element.ok_or_else(|| Failure("this operation needs --element".into()))
}

fn extension(
    set: &BinarySet,
    kind: Option<ExtensionKind>,
    element: Option<usize>,
    partner: Option<&str>,
) -> Result<Extension, Failure> {
    let kind = kind.ok_or_else(|| Failure("extend needs --kind".into()))?;
    Ok(match kind {
        ExtensionKind::Loop => Extension::Loop,
        ExtensionKind::Coloop => Extension::Coloop,
        ExtensionKind::Frame => Extension::Frame,
        ExtensionKind::Star => Extension::Star,
        ExtensionKind::Parallel => Extension::Parallel(need_element(element)?),
        ExtensionKind::NearFrame => {
            let text = partner.ok_or_else(|| Failure("near-frame needs --partner".into()))?;
            match Word::parse_text(text.trim()) {
                Some((w, len)) if len == set.order() => Extension::NearFrame(w),
                _ => {
                    return Err(Failure(format!(
                        "--partner {text:?} is not a word of length {}",
                        set.order()
                    )))
                }
            }
        }
    })
}

fn op(
    operation: Operation,
    files: &[PathBuf],
    element: Option<usize>,
    kind: Option<ExtensionKind>,
    partner: Option<&str>,
    verify: bool,
    json: bool,
) -> Outcome {
    let needed = arity(operation);
    if files.len() != needed {
        return Err(Failure(format!(
            "this operation takes {needed} file(s), got {}",
            files.len()
        )));
    }
    let sets = files
        .iter()
        .map(|f| read_set(f))
        .collect::<Result<Vec<_>, _>>()?;
    let a = &sets[0];
    let mut notes: Vec<(&str, Value)> = Vec::new();
    let result = match operation {
        Operation::Contract => contract(a, need_element(element)?)?,
        Operation::Delete => {
            let d = delete(a, need_element(element)?)?;
            notes.push(("duplicates", json!(d.had_duplicates)));
            d.result
        }
        Operation::Puncture => puncture(a, need_element(element)?)?,
        Operation::Extend => extend(a, extension(a, kind, element, partner)?)?,
        Operation::DirectSum => direct_sum(a, &sets[1])?,
        Operation::MutualFraming => {
            let (s, v) = mutual_framing(a, &sets[1])?;
            notes.push(("case", json!(format!("{:?}", v.case))));
            notes.push(("predicted_powerful", json!(v.powerful)));
            s
        }
        Operation::Bullet => bullet(a, &sets[1])?,
        Operation::Diamond => diamond(a, &sets[1])?,
        Operation::Closure => disjunctive_closure(a)?,
        Operation::Canon => {
            let form = canonical_form(a)?;
            notes.push(("witness", json!(form.witness)));
            form.to_set()
        }
        Operation::Min => {
            if verify {
                return Err(Failure("--verify does not apply to a clutter".into()));
            }
            min_members(a).as_set()
        }
    };
    let powerful = if verify {
        Some(is_powerful_with(&result, &limits()?)?)
    } else {
        None
    };
    if let Some(p) = powerful {
        notes.push(("powerful", json!(p)));
    }
    if json {
        let mut report = json!({ "command": "op", "result": set_json(&result) });
        for (k, v) in notes {
            report[k] = v;
        }
        print_json(report);
    } else {
        for (k, v) in &notes {
            println!("# {k}: {v}");
        }
        print_set(&result);
    }
    Ok(verdict(powerful.unwrap_or(true)))
}

fn load_census(
    order: usize,
    cache: Option<&PathBuf>,
    threads: usize,
    keep: bool,
) -> Result<(CensusReport, bool), Failure> {
    if let Some(path) = cache {
        if path.exists() {
            return Ok((read_cache(path, order)?, true));
        }
    }
    let report = census_with(
        order,
        &CensusConfig {
            threads,
            keep_representatives: keep || cache.is_some(),
        },
    )?;
    if let Some(path) = cache {
        write_cache(path, &report)?;
    }
    Ok((report, false))
}

fn check_extended(order: usize, extended: bool) -> Result<(), Failure> {
    if order > DEFAULT_CENSUS_ORDER && !extended {
        return Err(Failure(format!("order {order} needs --extended")));
    }
    Ok(())
}

fn census(
    order: usize,
    cache: Option<PathBuf>,
    threads: usize,
    extended: bool,
    expect_paper: bool,
    reps: bool,
    json: bool,
) -> Outcome {
    check_extended(order, extended)?;
    let expected = if expect_paper {
        Some(
            known_counts(order)
                .ok_or_else(|| Failure(format!("no published row for order {order}")))?,
        )
    } else {
        None
    };
    let (report, from_cache) = load_census(order, cache.as_ref(), threads, reps)?;
    let matches = expected.map(|(p, pnl)| report.p == p && report.p_nonlinear == pnl);
    if json {
        let mut out = json!({
            "command": "census",
            "order": order,
            "p": report.p,
            "p_nonlinear": report.p_nonlinear,
            "labelled": report.labelled,
            "antichains": report.antichains,
            "wall_time_ms": report.wall_time.as_millis() as u64,
            "from_cache": from_cache,
        });
        if let Some((p, pnl)) = expected {
            out["expected"] = json!({ "p": p, "p_nonlinear": pnl, "matches": matches });
        }
        if reps {
            let classes: Vec<Value> = report
                .classes
                .iter()
                .flatten()
                .map(|s| json!(s.to_lines()))
                .collect();
            out["representatives"] = json!(classes);
        }
        print_json(out);
    } else {
        if from_cache {
            println!("# read from cache");
        }
        println!(
            "n={order} p={} pnl={} labelled={} antichains={} time={:.3}s",
            report.p,
            report.p_nonlinear,
            report.labelled,
            report.antichains,
            report.wall_time.as_secs_f64()
        );
        if let Some((p, pnl)) = expected {
            let status = if matches == Some(true) {
                "match"
            } else {
                "MISMATCH"
            };
            println!("published p={p} pnl={pnl}: {status}");
        }
        if reps {
            for (i, s) in report.classes.iter().flatten().enumerate() {
                println!();
                println!("# class {} linear={}", i + 1, yes_no(is_linear(s)));
                print_set(s);
            }
        }
    }
    Ok(verdict(matches.unwrap_or(true)))
}

fn reconstruct(file: &Path, order: Option<usize>, json: bool) -> Outcome {
    let clutter = read_set_file(file)?
        .into_clutter(order)
        .map_err(|e| Failure(format!("{}: {e}", file.display())))?;
    let outcome = powerful::reconstruct(&clutter)?;
    let accepted = outcome.accepted().is_some();
    if json {
        let report = match &outcome {
            ReconstructionOutcome::Accepted(s) => {
                json!({ "command": "reconstruct", "accepted": true, "result": set_json(s) })
            }
            ReconstructionOutcome::Rejected {
                witness,
                subset_sum,
            } => json!({
                "command": "reconstruct",
                "accepted": false,
                "witness": element_list(*witness),
                "subset_sum": subset_sum,
            }),
            ReconstructionOutcome::RejectedPostCheck(f) => json!({
                "command": "reconstruct",
                "accepted": false,
                "post_check": post_check_name(*f),
            }),
        };
        print_json(report);
    } else {
        match &outcome {
            ReconstructionOutcome::Accepted(s) => print_set(s),
            ReconstructionOutcome::Rejected {
                witness,
                subset_sum,
            } => println!(
                "rejected: {subset_sum} members strictly inside X={}",
                elements(*witness)
            ),
            ReconstructionOutcome::RejectedPostCheck(f) => {
                println!("rejected after reconstruction: {}", post_check_name(*f))
            }
        }
    }
    Ok(verdict(accepted))
}

fn post_check_name(f: PostCheckFailure) -> &'static str {
    match f {
        PostCheckFailure::NotPowerful => "result not powerful",
        PostCheckFailure::ClutterMismatch => "minimal members differ from input",
    }
}

fn conjecture(which: Conjecture, order: usize, extended: bool, json: bool) -> Outcome {
    check_extended(order, extended)?;
    let min = match which {
        Conjecture::Coloop => 1,
        Conjecture::Projection => 2,
    };
    if order < min {
        return Err(Failure(format!("order must be at least {min}")));
    }
    let (report, _) = load_census(order, None, 0, true)?;
    let classes = report.classes.unwrap_or_default();
    let (name, examined, in_scope, counterexamples, extra) = match which {
        Conjecture::Coloop => {
            let r = check_conjecture_coloop_on(order, &classes)?;
            let extra = json!({
                "linear_in_scope": r.linear_in_scope,
                "linear_counterexamples": r.linear_counterexamples(),
            });
            ("coloop", r.examined, r.in_scope, r.counterexamples, extra)
        }
        Conjecture::Projection => {
            let r = check_conjecture_projection_on(order, &classes)?;
            let extra = json!({ "star_recoveries": r.star_recoveries });
            (
                "projection",
                r.examined,
                r.in_scope,
                r.counterexamples,
                extra,
            )
        }
    };
    if json {
        let found: Vec<Value> = counterexamples
            .iter()
            .map(|s| json!(s.to_lines()))
            .collect();
        let mut out = json!({
            "command": "conjecture",
            "conjecture": name,
            "order": order,
            "examined": examined,
            "in_scope": in_scope,
            "counterexamples": found,
            "holds": counterexamples.is_empty(),
        });
        if let (Value::Object(out), Value::Object(extra)) = (&mut out, extra) {
            out.extend(extra);
        }
        print_json(out);
    } else {
        println!(
            "{name} n={order}: examined {examined}, in scope {in_scope}, counterexamples {}",
            counterexamples.len()
        );
        for s in &counterexamples {
            println!();
            print_set(s);
        }
    }
    Ok(verdict(counterexamples.is_empty()))
}

fn family(seed_files: &[PathBuf], rounds: usize, members: bool, json: bool) -> Outcome {
    let seeds: Vec<BinarySet> = if seed_files.is_empty() {
        family_seeds().to_vec()
    } else {
        seed_files
            .iter()
            .map(|f| read_set(f))
            .collect::<Result<_, _>>()?
    };
    let report = diamond_family(&seeds, rounds)?;
    let holds = report.all_powerful
        && report.all_loopless
        && report.all_frameless
        && report.all_nonlinear
        && report.pairwise_nonisomorphic;
    let size = report.members.first().map_or(0, BinarySet::len);
    if json {
        let mut out = json!({
            "command": "family",
            "seeds": seeds.len(),
            "rounds": rounds,
            "round_sizes": report.round_sizes,
            "order": report.order(),
            "size": size,
            "all_powerful": report.all_powerful,
            "all_loopless": report.all_loopless,
            "all_frameless": report.all_frameless,
            "all_nonlinear": report.all_nonlinear,
            "pairwise_nonisomorphic": report.pairwise_nonisomorphic,
        });
        if members {
            let list: Vec<Value> = report.members.iter().map(|s| json!(s.to_lines())).collect();
            out["members"] = json!(list);
        }
        print_json(out);
    } else {
        println!(
            "{} seeds, {rounds} round(s): sizes {:?}, members of order {} and size {size}",
            seeds.len(),
            report.round_sizes,
            report.order()
        );
        println!("powerful {}", yes_no(report.all_powerful));
        println!("loopless {}", yes_no(report.all_loopless));
        println!("frameless {}", yes_no(report.all_frameless));
        println!("nonlinear {}", yes_no(report.all_nonlinear));
        println!(
            "pairwise nonisomorphic {}",
            yes_no(report.pairwise_nonisomorphic)
        );
        if members {
            for (i, s) in report.members.iter().enumerate() {
                println!();
                println!("# member {}", i + 1);
                print_set(s);
            }
        }
    }
    Ok(verdict(holds))
}

fn graymap(file: &Path, check: bool, json: bool) -> Outcome {
    let code = read_z4(file)?;
    if code.is_empty() {
        return Err(Failure(format!("{}: no words found", file.display())));
    }
    let image = gray_map(&code)?;
    let duplicates = image.has_duplicates();
    if duplicates {
        eprintln!("warning: the image repeats some words");
    }
    let failure = if check {
        let limits = limits()?;
        if image.order > limits.zeta_max_order {
            return Err(powerful::Error::OrderTooLarge {
                order: image.order,
                max: limits.zeta_max_order,
            }
            .into());
        }
        let set = image.to_set();
        // a repeated word changes the counts, so test the multiset directly
        Some(if duplicates {
            multiset_failure(&image.rows, image.order)
        } else {
            first_failure_with(&set, &limits)?
        })
    } else {
        None
    };
    if json {
        let words: Vec<String> = image.rows.iter().map(|w| w.to_text(image.order)).collect();
        let mut out = json!({
            "command": "graymap",
            "order": image.order,
            "words": words,
            "duplicates": duplicates,
        });
        if let Some(f) = failure {
            out["powerful"] = json!(f.is_none());
            out["first_failure"] = witness_json(f);
        }
        print_json(out);
    } else {
        for w in &image.rows {
            println!("{}", w.to_text(image.order));
        }
        if let Some(f) = failure {
            match f {
                None => println!("# powerful: yes"),
                Some(w) => println!("# powerful: no, X={} count {}", elements(w.x), w.count),
            }
        }
    }
    Ok(verdict(failure.is_none_or(|f| f.is_none())))
}

fn multiset_failure(rows: &[Word], order: usize) -> Option<PowerWitness> {
    (0u32..1 << order).find_map(|x| {
        let count = rows.iter().filter(|w| w.0 & x == 0).count() as u32;
        (!is_power_of_two(count as u64)).then_some(PowerWitness { x: Word(x), count })
    })
}
