//! Diagnostics on stderr, controlled by the COLLAPSE_LOG environment
//! variable: off (default), info, or trace. stdout stays machine-readable.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Off,
    Info,
    Trace,
}

fn level() -> Level {
    static LEVEL: OnceLock<Level> = OnceLock::new();
    *LEVEL.get_or_init(|| match std::env::var("COLLAPSE_LOG").as_deref() {
        Ok("info") => Level::Info,
        Ok("trace") => Level::Trace,
        _ => Level::Off,
    })
}

pub fn info(msg: impl AsRef<str>) {
    if level() >= Level::Info {
        eprintln!("[info] {}", msg.as_ref());
    }
}

pub fn trace(msg: impl AsRef<str>) {
    if level() >= Level::Trace {
        eprintln!("[trace] {}", msg.as_ref());
    }
}
