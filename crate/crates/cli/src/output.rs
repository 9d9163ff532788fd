use std::io::{self, IsTerminal, Write};
use std::path::Path;

use serde_json::Value;
use tempfile::NamedTempFile;

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(payload: &Value) -> String {
    let mut text = serde_json::to_string_pretty(payload).expect("values always serialize");
    text.push('\n');
    text
}

/// Writes to `out` via a temporary file in the same directory, so a failed
/// run never leaves a truncated file behind.
pub fn emit(payload: &Value, out: Option<&Path>) -> io::Result<()> {
    let text = render(payload);
    let Some(path) = out else {
        let mut stdout = io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        return stdout.flush();
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub struct Diagnostics {
    color: bool,
}

impl Diagnostics {
    /// Colour is on for terminals unless `PSL_COLOR=0`.
    pub fn from_env() -> Self {
        let disabled = std::env::var("PSL_COLOR").is_ok_and(|v| v == "0");
        Diagnostics {
            color: !disabled && io::stderr().is_terminal(),
        }
    }

    pub fn error(&self, msg: &str) {
        self.line("31", "error", msg);
    }

    pub fn note(&self, msg: &str) {
        self.line("33", "note", msg);
    }

    fn line(&self, ansi: &str, tag: &str, msg: &str) {
        if self.color {
            eprintln!("\x1b[1;{ansi}m{tag}:\x1b[0m {msg}");
        } else {
            eprintln!("{tag}: {msg}");
        }
    }
}
