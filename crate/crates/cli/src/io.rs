// SPDX-License-Identifier: Apache-2.0

use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Read, Write};

use pxk::graph::read_graph6_lines;
use pxk::{Graph, Result};

use crate::Failure;

/// Whole contents of a file, or of stdin for `-`.
pub fn read_text(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| Failure::new(crate::EXIT_INVALID, format!("{path}: {e}")))?;
    }
    Ok(text)
}

/// graph6 records with their 1-based line numbers.
pub fn read_graphs(path: &str) -> Result<Vec<(usize, Result<Graph>)>, Failure> {
    Ok(read_graph6_lines(&read_text(path)?))
}

pub fn open_output(path: Option<&str>, append: bool) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        None | Some("-") => Box::new(BufWriter::new(io::stdout().lock())),
        Some(p) => {
            let file = OpenOptions::new()
                .write(true)
                .create(true)
                .append(append)
                .truncate(!append)
                .open(p)
                .map_err(|e| Failure::new(crate::EXIT_INVALID, format!("{p}: {e}")))?;
            Box::new(BufWriter::new(file))
        }
    })
}
