//! Field exports: CSV (`u,v,re_psi,im_psi`, row-major with v fastest) and
//! the equivalent little-endian float64 binary quadruples.

use std::io::{BufWriter, Write};
use std::path::Path;

use ctw_core::field::WaveField;

pub fn write_csv(field: &WaveField, path: &Path) -> std::io::Result<()> {
    let mut out = BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "u,v,re_psi,im_psi")?;
    for i in 0..field.grid.n_u {
        let u = field.grid.u_at(i);
        for j in 0..field.grid.n_v {
            let z = field.at(i, j);
            writeln!(out, "{},{},{},{}", u, field.grid.v_at(j), z.re, z.im)?;
        }
    }
    out.flush()
}

pub fn write_binary(field: &WaveField, path: &Path) -> std::io::Result<()> {
    let mut out = BufWriter::new(std::fs::File::create(path)?);
    for i in 0..field.grid.n_u {
        let u = field.grid.u_at(i);
        for j in 0..field.grid.n_v {
            let z = field.at(i, j);
            out.write_all(&u.to_le_bytes())?;
            out.write_all(&field.grid.v_at(j).to_le_bytes())?;
            out.write_all(&z.re.to_le_bytes())?;
            out.write_all(&z.im.to_le_bytes())?;
        }
    }
    out.flush()
}
