//! The pinned dictionary compressor behind `B(...)` descriptions.
//!
//! Format (version `lzw12`):
//! * dictionary starts with the 256 single bytes; a new entry is appended
//!   after every emitted code except the last, until 4096 entries;
//! * the `i`-th emitted code (from 0) is written with
//!   `bit_length(min(255 + i, 4095))` bits, most significant bit first;
//! * the bit stream is cut into 5-bit groups (last one zero padded) and each
//!   group is written as a base32hex digit `0-9a-v`.
//!
//! A decoder stops once fewer bits remain than the next code width, which is
//! always at least 8, so the padding is never mistaken for a code.

use std::collections::HashMap;

const MAX_ENTRIES: usize = 4096;
pub const BASE32HEX: &[u8; 32] = b"0123456789abcdefghijklmnopqrstuv";

fn code_width(index: usize) -> u32 {
    let top = (255 + index).min(MAX_ENTRIES - 1);
    usize::BITS - top.leading_zeros()
}

pub fn compress(input: &[u8]) -> String {
    let mut dict: HashMap<Vec<u8>, u16> = (0..=255u8).map(|b| (vec![b], b as u16)).collect();
    let mut codes = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    for &byte in input {
        current.push(byte);
        if dict.contains_key(&current) {
            continue;
        }
        let last = current.pop().expect("nonempty");
        codes.push(dict[&current]);
        if dict.len() < MAX_ENTRIES {
            let mut entry = current.clone();
            entry.push(last);
            let next = dict.len() as u16;
            dict.insert(entry, next);
        }
        current.clear();
        current.push(last);
    }
    if !current.is_empty() {
        codes.push(dict[&current]);
    }

    let mut bits = BitWriter::default();
    for (i, &c) in codes.iter().enumerate() {
        bits.push(c as u32, code_width(i));
    }
    bits.finish()
}

pub fn decompress(payload: &str) -> Option<Vec<u8>> {
    let mut reader = BitReader::new(payload)?;
    let mut dict: Vec<Vec<u8>> = (0..=255u8).map(|b| vec![b]).collect();
    let mut out = Vec::new();
    let mut previous: Option<Vec<u8>> = None;
    let mut index = 0;
    while let Some(code) = reader.read(code_width(index)) {
        let code = code as usize;
        let entry = match (&previous, code.cmp(&dict.len())) {
            (_, std::cmp::Ordering::Less) => dict[code].clone(),
            (Some(prev), std::cmp::Ordering::Equal) => {
                let mut e = prev.clone();
                e.push(prev[0]);
                e
            }
            _ => return None,
        };
        out.extend_from_slice(&entry);
        if let Some(prev) = previous.take() {
            if dict.len() < MAX_ENTRIES {
                let mut e = prev;
                e.push(entry[0]);
                dict.push(e);
            }
        }
        previous = Some(entry);
        index += 1;
    }
    Some(out)
}

#[derive(Default)]
struct BitWriter {
    acc: u64,
    pending: u32,
    out: String,
}

impl BitWriter {
    fn push(&mut self, value: u32, width: u32) {
        self.acc = (self.acc << width) | value as u64;
        self.pending += width;
        while self.pending >= 5 {
            self.pending -= 5;
            let digit = (self.acc >> self.pending) & 31;
            self.out.push(BASE32HEX[digit as usize] as char);
        }
        self.acc &= (1u64 << self.pending) - 1;
    }

    fn finish(mut self) -> String {
        if self.pending > 0 {
            let digit = (self.acc << (5 - self.pending)) & 31;
            self.out.push(BASE32HEX[digit as usize] as char);
        }
        self.out
    }
}

struct BitReader {
    bits: Vec<bool>,
    pos: usize,
}

impl BitReader {
    fn new(payload: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(payload.len() * 5);
        for c in payload.bytes() {
            let v = BASE32HEX.iter().position(|&d| d == c)?;
            bits.extend((0..5).rev().map(|i| (v >> i) & 1 == 1));
        }
        Some(BitReader { bits, pos: 0 })
    }

    fn read(&mut self, width: u32) -> Option<u32> {
        let width = width as usize;
        if self.bits.len() - self.pos < width {
            return None;
        }
        let v = self.bits[self.pos..self.pos + width]
            .iter()
            .fold(0u32, |acc, &b| (acc << 1) | b as u32);
        self.pos += width;
        Some(v)
    }
}
