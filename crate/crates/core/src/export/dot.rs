use std::fmt::Write;

use crate::session::Listing;

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected Hasse diagram, bottom to top, one `upper -- lower` line per
/// cover in order of the upper element.
pub fn hasse_dot(listing: &Listing) -> String {
    let mut out = String::new();
    let name = format!("{} {} {}", listing.kind, listing.group, listing.target);
    writeln!(out, "graph \"{}\" {{", escape(&name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for e in &listing.elements {
        writeln!(out, "  n{} [label=\"{}\"];", e.id, escape(&e.text)).unwrap();
    }
    let mut covers = listing.covers.clone();
    covers.sort_by_key(|&[lo, hi]| (hi, lo));
    for [lo, hi] in covers {
        writeln!(out, "  n{hi} -- n{lo};").unwrap();
    }
    out.push_str("}\n");
    out
}
