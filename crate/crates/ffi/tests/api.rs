use chordal_mds_ffi::*;
use std::ffi::{c_int, c_void, CStr};
use std::ptr;

fn message(ptr: *const std::ffi::c_char) -> String {
    unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string()
}

fn graph(text: &CStr) -> *mut CmdsGraph {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { cmds_graph_parse(text.as_ptr(), &mut g) },
        CmdsStatus::Ok
    );
    g
}

unsafe extern "C" fn collect(vertices: *const u32, len: usize, user: *mut c_void) -> c_int {
    let out = &mut *(user as *mut Vec<Vec<u32>>);
    out.push(if len == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(vertices, len).to_vec()
    });
    0
}

unsafe extern "C" fn stop_at_once(_: *const u32, _: usize, _: *mut c_void) -> c_int {
    1
}

#[test]
fn streams_solutions() {
    let g = graph(c"5 4\n0 1\n1 2\n1 3\n3 4\n");
    let mut seen: Vec<Vec<u32>> = Vec::new();
    let mut count = 0;
    let status = unsafe {
        cmds_enumerate(
            g,
            0,
            Some(collect),
            &mut seen as *mut _ as *mut c_void,
            &mut count,
        )
    };
    assert_eq!(status, CmdsStatus::Ok);
    assert_eq!(count, 4);
    assert!(seen.contains(&vec![1, 4]));
    let status = unsafe { cmds_enumerate(g, 0, Some(stop_at_once), ptr::null_mut(), &mut count) };
    assert_eq!((status, count), (CmdsStatus::Ok, 1));
    unsafe { cmds_graph_free(g) };
}

#[test]
fn collects_with_limit() {
    let edges = [0u32, 1, 1, 2, 0, 2];
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { cmds_graph_new(3, edges.as_ptr(), 3, &mut g) },
        CmdsStatus::Ok
    );
    assert_eq!(unsafe { cmds_graph_vertex_count(g) }, 3);
    assert!(unsafe { cmds_graph_is_chordal(g) });
    let mut all = ptr::null_mut();
    assert_eq!(
        unsafe { cmds_solutions_new(g, 0, &mut all) },
        CmdsStatus::Ok
    );
    assert_eq!(unsafe { cmds_solutions_len(all) }, 3);
    let (mut verts, mut len) = (ptr::null(), 0);
    assert_eq!(
        unsafe { cmds_solutions_get(all, 2, &mut verts, &mut len) },
        CmdsStatus::Ok
    );
    assert_eq!(len, 1);
    assert_eq!(
        unsafe { cmds_solutions_get(all, 3, &mut verts, &mut len) },
        CmdsStatus::OutOfRange
    );
    assert!(message(cmds_last_error_message()).contains("out of range"));
    let mut two = ptr::null_mut();
    assert_eq!(
        unsafe { cmds_solutions_new(g, 2, &mut two) },
        CmdsStatus::Ok
    );
    assert_eq!(unsafe { cmds_solutions_len(two) }, 2);
    unsafe {
        cmds_solutions_free(all);
        cmds_solutions_free(two);
        cmds_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { cmds_graph_parse(c"2 1\n0 7\n".as_ptr(), &mut g) },
        CmdsStatus::ParseError
    );
    assert!(message(cmds_last_error_message()).contains("out of range"));
    assert_eq!(
        unsafe { cmds_graph_parse(ptr::null(), &mut g) },
        CmdsStatus::NullPointer
    );
    assert_eq!(
        unsafe { cmds_graph_parse(c"\xff".as_ptr(), &mut g) },
        CmdsStatus::InvalidUtf8
    );
    assert_eq!(
        unsafe { cmds_graph_new(2, ptr::null(), 1, &mut g) },
        CmdsStatus::NullPointer
    );
    let bad = [0u32, 5];
    assert_eq!(
        unsafe { cmds_graph_new(2, bad.as_ptr(), 1, &mut g) },
        CmdsStatus::InvalidGraph
    );

    let c4 = graph(c"4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert!(!unsafe { cmds_graph_is_chordal(c4) });
    let mut count = 0;
    let status = unsafe { cmds_enumerate(c4, 0, Some(stop_at_once), ptr::null_mut(), &mut count) };
    assert_eq!(status, CmdsStatus::NotChordal);
    assert_eq!(
        unsafe { cmds_enumerate(c4, 0, None, ptr::null_mut(), &mut count) },
        CmdsStatus::NullPointer
    );
    unsafe { cmds_graph_free(c4) };

    assert_eq!(
        message(cmds_status_message(CmdsStatus::NotChordal as c_int)),
        "graph is not chordal"
    );
    assert_eq!(message(cmds_status_message(99)), "unknown status");
    unsafe {
        cmds_graph_free(ptr::null_mut());
        cmds_solutions_free(ptr::null_mut());
    }
    assert_eq!(unsafe { cmds_graph_vertex_count(ptr::null()) }, 0);
}
