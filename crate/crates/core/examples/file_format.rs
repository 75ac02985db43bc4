//! The text format: write, read back and compare.

use pavmat::catalog;
use pavmat::format::{parse, parse_matroid, serialize_matroid, FormatError};

fn main() {
    let m = catalog::kelly_moser().matroid;
    let text = serialize_matroid(&m);
    print!("{text}");
    let back = parse_matroid(&text).unwrap();
    println!("round trip equivalent: {}", back.equivalent(&m));

    let circuits = "# K4 by its cycles\nname k4\nelements 6\nrank 3\nrep circuits\n\
                    set { 1 2 4 }\nset { 1 3 5 }\nset { 2 3 6 }\nset { 4 5 6 }\n\
                    set { 1 3 4 6 }\nset { 1 2 5 6 }\nset { 2 3 4 5 }\n";
    let file = parse(circuits).unwrap();
    println!("{} sets, rep {}", file.sets.len(), file.rep.as_str());

    for bad in [
        "elements 4\nrank 2\nrep paving\nset { 1 }\n",
        "rank 2\n",
        "elements 3\nrank 2\nrep paving\nset { 1 9 }\n",
    ] {
        match parse_matroid(bad) {
            Err(FormatError::Syntax { line, message }) => {
                println!("syntax error line {line}: {message}")
            }
            Err(FormatError::Semantic(e)) => println!("rejected: {e}"),
            Ok(_) => println!("accepted"),
        }
    }
}
