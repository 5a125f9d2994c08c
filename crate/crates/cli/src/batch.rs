//! JSON-lines batch processing.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::document::{compute, input_failure, ResultDocument, Settings};
use crate::input::parse_record;

pub const THREADS_VAR: &str = "TRICENTER_THREADS";

/// Worker count from `TRICENTER_THREADS`; 1 when unset.
pub fn thread_count() -> Result<usize, String> {
    match std::env::var(THREADS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(1),
        Err(e) => Err(format!("{THREADS_VAR}: {e}")),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!(
                "{THREADS_VAR} must be a positive integer, got {s:?}"
            )),
        },
    }
}

fn process_line(line: &str, settings: &Settings) -> ResultDocument {
    match parse_record(line) {
        Ok(tri) => compute(&tri, settings),
        Err(e) => input_failure(&e),
    }
}

/// One document per non-blank input line, in input order.
pub fn run(input: &str, settings: &Settings, threads: usize) -> Vec<ResultDocument> {
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    let threads = threads.clamp(1, lines.len().max(1));
    if threads == 1 {
        return lines.iter().map(|l| process_line(l, settings)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<ResultDocument>>> =
        lines.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(line) = lines.get(i) else { break };
                let doc = process_line(line, settings);
                *slots[i].lock().expect("slot lock") = Some(doc);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| {
            m.into_inner()
                .expect("slot lock")
                .expect("every line processed")
        })
        .collect()
}
