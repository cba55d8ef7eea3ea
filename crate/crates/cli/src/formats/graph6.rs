//! The standard graph6 text encoding (header-free variant).
//!
//! Size field: n+63 for n <= 62, '~' plus three 6-bit bytes up to 258047.
//! Body: the upper triangle in column order, packed 6 bits per printable
//! byte (offset 63).

use std::fmt;

use sintur_core::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    /// Byte outside the graph6 alphabet (63..=126).
    InvalidChar { offset: usize, byte: u8 },
    /// Input ended before the encoded size/bits were complete.
    UnexpectedEnd { offset: usize },
    /// Valid prefix followed by extra bytes.
    TrailingData { offset: usize },
    /// Vertex counts past the 3-byte size field are not supported.
    TooLarge { n: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::InvalidChar { offset, byte } => {
                write!(f, "invalid graph6 byte {byte:#04x} at offset {offset}")
            }
            Graph6Error::UnexpectedEnd { offset } => {
                write!(f, "graph6 string truncated at offset {offset}")
            }
            Graph6Error::TrailingData { offset } => {
                write!(f, "unexpected trailing data at offset {offset}")
            }
            Graph6Error::TooLarge { n } => {
                write!(
                    f,
                    "graph6 encoding here supports up to 258047 vertices, got {n}"
                )
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    } else {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut acc: u8 = 0;
    let mut fill: u8 = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable bytes"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { offset, byte: b });
        }
    }
    let pos;
    let n: usize = if bytes.is_empty() {
        return Err(Graph6Error::UnexpectedEnd { offset: 0 });
    } else if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit sizes exceed what this tool builds
            return Err(Graph6Error::TooLarge { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::UnexpectedEnd {
                offset: bytes.len(),
            });
        }
        pos = 4;
        (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize)
    } else {
        pos = 1;
        (bytes[0] - 63) as usize
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::UnexpectedEnd {
            offset: bytes.len(),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingData {
            offset: pos + nbytes,
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("in range, loop-free"))
}
