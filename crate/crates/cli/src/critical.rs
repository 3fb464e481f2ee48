use critshare::critical::{
    classify_strength, find_critical_sets, is_critical_set, Criticality, Forcing, SearchLimits, Strength,
};
use critshare::document::{parse_partial, parse_square, partial_document, report_document, Origin};
use critshare::latin::Triple;

use crate::args::{Context, CriticalCommand};
use crate::failure::Failure;
use crate::io::{create_dir, emit, emit_to, read_doc};

fn triple(t: &Triple) -> String {
    format!("{} {} {}", t.row, t.col, t.symbol)
}

pub fn run(cmd: CriticalCommand, ctx: &Context) -> Result<(), Failure> {
    match cmd {
        CriticalCommand::Check { input, output } => {
            let partial = parse_partial(&read_doc(&input)?)?;
            let mut report = report_document("certificate", Origin::Derived);
            report.push("order", partial.order()).push("size", partial.len());
            let verdict = is_critical_set(&partial, ctx.budget)?;
            match &verdict {
                Criticality::Critical(cert) => {
                    report.push("critical", "yes");
                    for w in &cert.witnesses {
                        report.push("witness", triple(&w.removed));
                    }
                }
                Criticality::NotCritical(why) => {
                    report.push("critical", "no").push("reason", why);
                }
            }
            emit(&report, output.out.as_deref())?;
            match verdict {
                Criticality::Critical(_) => Ok(()),
                Criticality::NotCritical(why) => Err(Failure::verification(format!("not a critical set: {why}"))),
            }
        }
        CriticalCommand::Find {
            input,
            max_size,
            seed,
            samples,
            subset_budget,
            sets_dir,
            output,
        } => {
            let square = parse_square(&read_doc(&input)?)?;
            let limits = SearchLimits {
                budget: ctx.budget,
                subset_budget,
                samples,
                seed,
            };
            let search = find_critical_sets(&square, max_size, &limits)?;
            let mut report = report_document("critical-sets", Origin::Seed(seed));
            report
                .push("order", square.order())
                .push("max-size", max_size)
                .push("exhaustive", if search.exhaustive { "yes" } else { "no" })
                .push("found", search.sets.len());
            if let Some(min) = search.sets.iter().map(|c| c.size()).min() {
                report.push("min-size", min);
            }
            for cert in &search.sets {
                let ts: Vec<String> = cert.base.iter().map(triple).collect();
                report.push("set", ts.join(" "));
            }
            if let Some(dir) = sets_dir {
                create_dir(&dir)?;
                for (i, cert) in search.sets.iter().enumerate() {
                    emit_to(&partial_document(&cert.base, Origin::Derived), &dir.join(format!("set-{}.txt", i + 1)))?;
                }
            }
            emit(&report, output.out.as_deref())
        }
        CriticalCommand::Classify { input, output } => {
            let partial = parse_partial(&read_doc(&input)?)?;
            let strength = classify_strength(&partial, ctx.budget)?;
            let mut report = report_document("strength", Origin::Derived);
            report.push("order", partial.order()).push("size", partial.len()).push("strength", strength.label());
            if let Strength::Strong(chain) | Strength::SemiStrong(chain) = &strength {
                for step in &chain.steps {
                    let how = match step.forcing {
                        Forcing::Cell => "cell",
                        Forcing::Row => "row",
                        Forcing::Column => "column",
                    };
                    report.push("step", format!("{} {how}", triple(&step.triple)));
                }
            }
            emit(&report, output.out.as_deref())
        }
    }
}
