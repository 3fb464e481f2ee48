use std::fs;
use std::io::Write;
use std::path::Path;

use critshare::document::{validate, Document};

use crate::args::Message;
use crate::failure::Failure;

pub fn read_doc(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    validate(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

pub fn read_docs(paths: &[impl AsRef<Path>]) -> Result<Vec<Document>, Failure> {
    paths.iter().map(|p| read_doc(p.as_ref())).collect()
}

fn checked(doc: &Document) -> Result<String, Failure> {
    let text = doc.emit();
    validate(&text).map_err(|e| Failure::validation(format!("internal: emitted {} does not re-parse: {e}", doc.kind)))?;
    Ok(text)
}

/// Writes to `path`, or standard output when absent.
pub fn emit(doc: &Document, path: Option<&Path>) -> Result<(), Failure> {
    let text = checked(doc)?;
    match path {
        Some(p) => write_file(p, &text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn emit_to(doc: &Document, path: &Path) -> Result<(), Failure> {
    emit(doc, Some(path))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}

pub fn create_dir(path: &Path) -> Result<(), Failure> {
    fs::create_dir_all(path).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}

pub fn message_bytes(m: &Message) -> Result<Vec<u8>, Failure> {
    match (&m.message, &m.message_file) {
        (Some(s), _) => Ok(s.as_bytes().to_vec()),
        (None, Some(p)) => fs::read(p).map_err(|e| Failure::validation(format!("{}: {e}", p.display()))),
        (None, None) => Err(Failure::usage("a message is required")),
    }
}
