//! The graph6 text encoding of undirected graphs (one graph per line).

use crimp_core::{Edge, Graph, Vertex};

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        assert!(n < 258_048, "graph6 short form supports fewer than 258048 vertices");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut word = 0u8;
    let mut bits = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(word + 63);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((word << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode(line: &str) -> Option<Graph> {
    let bytes: Vec<u8> = line.trim_end().bytes().map(|b| b.wrapping_sub(63)).collect();
    let (n, body) = match bytes.first()? {
        &63 => {
            if bytes.len() < 4 {
                return None;
            }
            (((bytes[1] as usize) << 12) | ((bytes[2] as usize) << 6) | bytes[3] as usize, &bytes[4..])
        }
        &b if b < 63 => (b as usize, &bytes[1..]),
        _ => return None,
    };
    if body.iter().any(|&b| b > 63) || body.len() != (n * n.saturating_sub(1) / 2).div_ceil(6) {
        return None;
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut idx = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            if body[idx / 6] >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).ok()
}
