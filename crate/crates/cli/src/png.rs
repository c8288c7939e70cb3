//! A minimal dependency-free PNG writer: 8-bit RGB, stored (uncompressed)
//! deflate blocks inside a valid zlib stream. Output is byte-deterministic.

use std::io::Write;
use std::path::Path;

fn crc32(data: &[u8]) -> u32 {
    // standard PNG CRC-32 (reflected, poly 0xEDB88320)
    let mut table = [0u32; 256];
    for (n, slot) in table.iter_mut().enumerate() {
        let mut c = n as u32;
        for _ in 0..8 {
            c = if c & 1 != 0 { 0xEDB8_8320 ^ (c >> 1) } else { c >> 1 };
        }
        *slot = c;
    }
    let mut crc = 0xFFFF_FFFFu32;
    for &b in data {
        crc = table[((crc ^ b as u32) & 0xFF) as usize] ^ (crc >> 8);
    }
    crc ^ 0xFFFF_FFFF
}

fn adler32(data: &[u8]) -> u32 {
    let (mut a, mut b) = (1u32, 0u32);
    for &byte in data {
        a = (a + byte as u32) % 65521;
        b = (b + a) % 65521;
    }
    (b << 16) | a
}

fn chunk(out: &mut Vec<u8>, kind: &[u8; 4], body: &[u8]) {
    out.extend_from_slice(&(body.len() as u32).to_be_bytes());
    let mut tagged = Vec::with_capacity(4 + body.len());
    tagged.extend_from_slice(kind);
    tagged.extend_from_slice(body);
    out.extend_from_slice(&tagged);
    out.extend_from_slice(&crc32(&tagged).to_be_bytes());
}

/// zlib stream with stored deflate blocks (no compression).
fn zlib_stored(raw: &[u8]) -> Vec<u8> {
    let mut out = vec![0x78, 0x01];
    let mut rest = raw;
    loop {
        let take = rest.len().min(65535);
        let (head, tail) = rest.split_at(take);
        let final_block = tail.is_empty();
        out.push(if final_block { 1 } else { 0 });
        out.extend_from_slice(&(take as u16).to_le_bytes());
        out.extend_from_slice(&(!(take as u16)).to_le_bytes());
        out.extend_from_slice(head);
        if final_block {
            break;
        }
        rest = tail;
    }
    out.extend_from_slice(&adler32(raw).to_be_bytes());
    out
}

/// Writes an 8-bit RGB image; `pixels` is row-major `(r, g, b)`.
pub fn write_rgb(
    path: &Path,
    width: usize,
    height: usize,
    pixels: &[(u8, u8, u8)],
) -> std::io::Result<()> {
    assert_eq!(pixels.len(), width * height);
    let mut raw = Vec::with_capacity(height * (1 + 3 * width));
    for row in 0..height {
        raw.push(0); // filter: none
        for &(r, g, b) in &pixels[row * width..(row + 1) * width] {
            raw.extend_from_slice(&[r, g, b]);
        }
    }
    let mut out = Vec::new();
    out.extend_from_slice(b"\x89PNG\r\n\x1a\n");
    let mut ihdr = Vec::new();
    ihdr.extend_from_slice(&(width as u32).to_be_bytes());
    ihdr.extend_from_slice(&(height as u32).to_be_bytes());
    ihdr.extend_from_slice(&[8, 2, 0, 0, 0]); // depth 8, color RGB
    chunk(&mut out, b"IHDR", &ihdr);
    chunk(&mut out, b"IDAT", &zlib_stored(&raw));
    chunk(&mut out, b"IEND", &[]);
    let mut file = std::fs::File::create(path)?;
    file.write_all(&out)
}
