use critshare::document::{parse_partial, parse_square, report_document, square_document, Kind, Origin};
use critshare::latin::{count_completions, random_latin_square, Count};

use crate::args::{Context, LatinCommand};
use crate::failure::Failure;
use crate::io::{emit, read_doc};

pub fn run(cmd: LatinCommand, ctx: &Context) -> Result<(), Failure> {
    match cmd {
        LatinCommand::Gen { order, seed, output } => {
            let square = random_latin_square(order, seed)?;
            emit(&square_document(&square, Origin::Seed(seed)), output.out.as_deref())
        }
        LatinCommand::Count { input, out } => {
            let doc = read_doc(&input)?;
            let partial = match doc.kind {
                Kind::Partial => parse_partial(&doc)?,
                Kind::Square => parse_square(&doc)?.to_partial(),
                other => return Err(Failure::validation(format!("expected a partial square, got {other}"))),
            };
            let count = count_completions(&partial, ctx.budget)?;
            println!("{count}");
            if let Some(path) = out {
                let mut report = report_document("count", Origin::Derived);
                report
                    .push("order", partial.order())
                    .push("given", partial.len())
                    .push("completions", count)
                    .push("exact", if count.is_exact() { "yes" } else { "no" });
                emit(&report, Some(&path))?;
            }
            match count {
                Count::Exact(_) => Ok(()),
                Count::AtLeast(k) => Err(Failure::budget(format!("budget exhausted after {k} completions"))),
            }
        }
    }
}
