use critshare::analysis::{
    compare, full_matrix, minimal_matrix, run_lsss_security, run_lsss_security_on, run_rsa_robustness,
    LsssSecurityReport, RsaRobustnessReport,
};
use critshare::document::{
    comparison_document, lsss_report_document, parse_deal_public, parse_share, rebuild_deal, rsa_report_document,
    Origin,
};

use crate::args::{AnalyzeCommand, Context, LsssSource, RsaMatrix};
use crate::failure::Failure;
use crate::io::{emit, read_doc, read_docs};

fn lsss_report(source: &LsssSource, ctx: &Context) -> Result<LsssSecurityReport, Failure> {
    match &source.deal {
        Some(path) => {
            let public = parse_deal_public(&read_doc(path)?)?;
            let shares = read_docs(&source.shares)?
                .iter()
                .map(|d| parse_share(d).map_err(Failure::from))
                .collect::<Result<Vec<_>, _>>()?;
            let deal = rebuild_deal(&public, &shares, ctx.budget)?;
            Ok(run_lsss_security_on(&[deal], source.seed, ctx.budget)?)
        }
        None => Ok(run_lsss_security(source.order, source.deals, source.seed, ctx.budget)?),
    }
}

fn rsa_report(matrix: &RsaMatrix, ctx: &Context) -> RsaRobustnessReport {
    let cells = if matrix.all_thresholds {
        full_matrix(&matrix.players, matrix.bits)
    } else {
        minimal_matrix(&matrix.players, matrix.bits)
    };
    run_rsa_robustness(&cells, matrix.tampers, matrix.rsa_seed, ctx.threads)
}

pub fn run(cmd: AnalyzeCommand, ctx: &Context) -> Result<(), Failure> {
    match cmd {
        AnalyzeCommand::Lsss { source, output } => {
            let report = lsss_report(&source, ctx)?;
            emit(&lsss_report_document(&report), output.out.as_deref())
        }
        AnalyzeCommand::Rsa { matrix, output } => {
            let report = rsa_report(&matrix, ctx);
            emit(&rsa_report_document(&report), output.out.as_deref())?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::verification("a robustness suite failed"))
            }
        }
        AnalyzeCommand::Compare {
            source,
            matrix,
            text,
            output,
        } => {
            let lsss = lsss_report(&source, ctx)?;
            let rsa = rsa_report(&matrix, ctx);
            let cmp = compare(&lsss, &rsa);
            let doc = comparison_document(&cmp, Origin::Seed(source.seed));
            if text {
                print!("{}", cmp.render_text());
                if let Some(path) = &output.out {
                    emit(&doc, Some(path))?;
                }
                Ok(())
            } else {
                emit(&doc, output.out.as_deref())
            }
        }
    }
}
