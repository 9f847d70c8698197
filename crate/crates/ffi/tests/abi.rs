use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use cubenoise_ffi::*;

fn last_error() -> String {
    let p = cn_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn cube_roundtrip() {
    unsafe {
        let values = [1.0, 3.0, 0.0, 2.0];
        let mut cube = ptr::null_mut();
        assert_eq!(cn_cube_new(2, values.as_ptr(), 4, &mut cube), CnStatus::Ok);
        assert_eq!(cn_cube_len(cube), 4);

        let mut back = [0.0; 4];
        assert_eq!(cn_cube_values(cube, back.as_mut_ptr(), 4), CnStatus::Ok);
        assert_eq!(back, values);

        let mut spec = [0.0; 4];
        assert_eq!(cn_cube_wht(cube, spec.as_mut_ptr(), 4), CnStatus::Ok);
        assert_eq!(spec, [1.5, -1.0, 0.5, 0.0]);

        let mut noisy = ptr::null_mut();
        assert_eq!(cn_cube_noise(cube, 0.5, &mut noisy), CnStatus::Ok);
        let mut flat = [0.0; 4];
        cn_cube_values(noisy, flat.as_mut_ptr(), 4);
        assert_eq!(flat, [1.5; 4]);
        cn_cube_free(noisy);

        let mut v = 0.0;
        assert_eq!(cn_cube_norm(cube, f64::INFINITY, &mut v), CnStatus::Ok);
        assert_eq!(v, 3.0);
        assert_eq!(cn_cube_entropy(cube, &mut v), CnStatus::Ok);
        assert!(v > 0.0);

        let mut g = CnGap::default();
        assert_eq!(cn_main_gap(cube, 2.0, 0.1, &mut g), CnStatus::Ok);
        assert!(g.gap >= -1e-9 && (g.gap - (g.rhs - g.lhs)).abs() < 1e-15);
        assert_eq!(cn_entropy_gap(cube, 0.2, &mut g), CnStatus::Ok);
        assert!(g.gap >= -1e-9);
        assert_eq!(cn_log_sobolev_gap(cube, 3.0, &mut g), CnStatus::Ok);
        assert!(g.gap >= -1e-9);
        cn_cube_free(cube);
    }
}

#[test]
fn status_codes_and_messages() {
    unsafe {
        let mut cube = ptr::null_mut();
        let values = [1.0, 2.0, 3.0];
        assert_eq!(cn_cube_new(2, values.as_ptr(), 3, &mut cube), CnStatus::InvalidArgument);
        assert!(cube.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(cn_cube_new(2, ptr::null(), 4, &mut cube), CnStatus::NullPointer);
        assert!(last_error().contains("values"));

        let zeros = [0.0; 2];
        assert_eq!(cn_cube_new(1, zeros.as_ptr(), 2, &mut cube), CnStatus::Ok);
        let mut v = 0.0;
        assert_eq!(cn_cube_entropy(cube, &mut v), CnStatus::Domain);
        let mut small = [0.0; 1];
        assert_eq!(cn_cube_values(cube, small.as_mut_ptr(), 1), CnStatus::BufferTooSmall);
        cn_cube_free(cube);

        assert_eq!(cn_r_exponent(0.5, &mut v), CnStatus::InvalidArgument);
        assert_eq!(cn_r_exponent(2.0, &mut v), CnStatus::Ok);
        assert!((v - 1.0 / std::f64::consts::LN_2).abs() < 1e-15);

        let rows = [0b11u64, 0b11];
        let mut code = ptr::null_mut();
        assert_eq!(cn_code_from_rows(2, rows.as_ptr(), 2, &mut code), CnStatus::Domain);
        let mut big = ptr::null_mut();
        assert_eq!(cn_code_reed_muller(1, 7, &mut big), CnStatus::InvalidArgument);

        cn_cube_free(ptr::null_mut());
        cn_code_free(ptr::null_mut());
        cn_matroid_free(ptr::null_mut());
        assert_eq!(cn_cube_len(ptr::null()), 0);
    }
}

#[test]
fn codes() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(cn_code_reed_muller(1, 3, &mut code), CnStatus::Ok);
        assert_eq!((cn_code_length(code), cn_code_dimension(code)), (8, 4));
        let mut a = [0u64; 9];
        assert_eq!(cn_code_weight_distribution(code, a.as_mut_ptr(), 9), CnStatus::Ok);
        assert_eq!(a, [1, 0, 0, 0, 14, 0, 0, 0, 1]);
        let mut l = CnLemma13::default();
        assert_eq!(cn_code_lemma13(code, 0.4, &mut l), CnStatus::Ok);
        assert!(l.max_residual < 1e-9);
        cn_code_free(code);

        let rows = [0b11u64];
        assert_eq!(cn_code_from_rows(2, rows.as_ptr(), 1, &mut code), CnStatus::Ok);
        let mut d = 0.0;
        assert_eq!(cn_code_rank_deficiency(code, 0.5, &mut d), CnStatus::Ok);
        assert_eq!(d, 0.25);
        cn_code_free(code);
    }
}

#[test]
fn matroids() {
    unsafe {
        let k4: [u32; 12] = [0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3];
        let mut m = ptr::null_mut();
        assert_eq!(cn_matroid_from_graph(4, k4.as_ptr(), 6, &mut m), CnStatus::Ok);
        let mut g = CnGap::default();
        assert_eq!(cn_matroid_lemma17(m, 0.5, &mut g), CnStatus::Ok);
        assert!(g.gap >= -1e-9);
        for delta in [0.5, 1.0, 2.0] {
            assert_eq!(cn_matroid_tail(m, 0.5, delta, &mut g), CnStatus::Ok);
            assert!(g.lhs <= g.rhs + 1e-12);
        }
        assert_eq!(cn_matroid_lemma17(m, 1.5, &mut g), CnStatus::InvalidArgument);
        cn_matroid_free(m);

        let bad: [u32; 2] = [0, 7];
        assert_eq!(cn_matroid_from_graph(4, bad.as_ptr(), 1, &mut m), CnStatus::InvalidArgument);

        let rows = [0b11u64];
        assert_eq!(cn_matroid_from_rows(2, rows.as_ptr(), 1, &mut m), CnStatus::Ok);
        assert_eq!(cn_matroid_lemma17(m, 0.5, &mut g), CnStatus::Ok);
        assert!((g.lhs - 1.25f64.log2()).abs() < 1e-15);
        cn_matroid_free(m);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/cubenoise.h")).unwrap();
    let src = include_str!("../src/lib.rs");
    let exported: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() > 20);
    for name in exported {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("CN_STATUS_OK = 0"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(cc.status.success());
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(dir.join("include/cubenoise.h"))
        .status()
        .unwrap();
    assert!(status.success());
}
