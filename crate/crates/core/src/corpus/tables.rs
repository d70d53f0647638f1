//! Printed rows of the three excluded-weight comparison tables.
//!
//! Cells are stored exactly as printed (comma-separated weights or `a-b`
//! ranges) together with the printed "(N weights)" annotations, and parsed
//! on demand.

use serde::{Deserialize, Serialize};

use crate::code::CodeParams;
use crate::exclusion::WeightSet;

/// Which table and which row (0-based) a row came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableRef {
    pub table: u8,
    pub row: usize,
}

/// The "(N weights)" annotations printed under each cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedCounts {
    pub chen_xie: u64,
    pub singleton: u64,
    pub griesmer: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub source: TableRef,
    pub params: CodeParams,
    pub expected_chen_xie: WeightSet,
    pub expected_singleton: WeightSet,
    pub expected_griesmer: Option<WeightSet>,
    pub printed_counts: PrintedCounts,
}

struct Printed {
    table: u8,
    params: (u64, u64, u64, u64),
    chen_xie: &'static str,
    singleton: &'static str,
    griesmer: Option<&'static str>,
    counts: (u64, u64, Option<u64>),
}

/// Parses `"13, 12"` or `"133-135, 167"` into a set.
pub fn parse_weight_list(cell: &str) -> Result<WeightSet, String> {
    let mut out = WeightSet::new();
    for part in cell.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let a: u64 = a
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad range `{part}`"))?;
                let b: u64 = b
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad range `{part}`"))?;
                if a > b {
                    return Err(format!("descending range `{part}`"));
                }
                out.extend(a..=b);
            }
            None => {
                out.insert(part.parse().map_err(|_| format!("bad weight `{part}`"))?);
            }
        }
    }
    Ok(out)
}

/// All rows of table `which` (1, 2 or 3); empty for any other value.
pub fn table_rows(which: u8) -> Vec<TableRow> {
    PRINTED
        .iter()
        .filter(|p| p.table == which)
        .enumerate()
        .map(|(row, p)| {
            let (n, k, d, q) = p.params;
            let parse = |s: &str| parse_weight_list(s).expect("embedded table data is well formed");
            TableRow {
                source: TableRef {
                    table: p.table,
                    row,
                },
                params: CodeParams::new(n, k, d, q),
                expected_chen_xie: parse(p.chen_xie),
                expected_singleton: parse(p.singleton),
                expected_griesmer: p.griesmer.map(parse),
                printed_counts: PrintedCounts {
                    chen_xie: p.counts.0,
                    singleton: p.counts.1,
                    griesmer: p.counts.2,
                },
            }
        })
        .collect()
}

#[rustfmt::skip]
static PRINTED: &[Printed] = &[
    Printed { table: 1, params: (15, 5, 7, 2), chen_xie: "13, 12", singleton: "13, 12, 11", griesmer: None, counts: (2, 3, None) },
    Printed { table: 1, params: (21, 9, 8, 2), chen_xie: "15, 14", singleton: "15, 14, 13", griesmer: None, counts: (2, 3, None) },
    Printed { table: 1, params: (31, 5, 16, 2), chen_xie: "31, 30, 29, 28", singleton: "31, 30, 29, 28, 27, 26, 25", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (32, 6, 16, 2), chen_xie: "31, 30, 29, 28", singleton: "31, 30, 29, 28, 27, 26, 25", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (47, 5, 24, 2), chen_xie: "47, 46, 45, 44", singleton: "47, 46, 45, 44, 43, 42, 41", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (48, 6, 24, 2), chen_xie: "47, 46, 45, 44", singleton: "47, 46, 45, 44, 43, 42, 41", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (55, 5, 28, 2), chen_xie: "55, 54, 53, 52", singleton: "55, 54, 53, 52, 51, 50, 49", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (56, 6, 28, 2), chen_xie: "55, 54, 53, 52", singleton: "55, 54, 53, 52, 51, 50, 49", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (59, 5, 30, 2), chen_xie: "59, 58, 57, 56", singleton: "59, 58, 57, 56, 55, 54, 53", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (60, 6, 30, 2), chen_xie: "59, 58, 57, 56", singleton: "59, 58, 57, 56, 55, 54, 53", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (61, 5, 31, 2), chen_xie: "61, 60, 59, 58", singleton: "61, 60, 59, 58, 57, 56, 55", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (62, 6, 31, 2), chen_xie: "61, 60, 59, 58", singleton: "61, 60, 59, 58, 57, 56, 55", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (63, 5, 32, 2), chen_xie: "63, 62, 61, 60", singleton: "63, 62, 61, 60, 59, 58, 57", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (63, 6, 32, 2), chen_xie: "63, 62, 61, 60, 59", singleton: "63, 62, 61, 60, 59, 58, 57, 56, 55", griesmer: None, counts: (5, 9, None) },
    Printed { table: 1, params: (63, 7, 31, 2), chen_xie: "61, 60, 59, 58", singleton: "61, 60, 59, 58, 57, 56, 55", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (64, 6, 32, 2), chen_xie: "63, 62, 61, 60", singleton: "63, 62, 61, 60, 59, 58, 57", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (64, 7, 32, 2), chen_xie: "63, 62, 61, 60, 59", singleton: "63, 62, 61, 60, 59, 58, 57, 56, 55", griesmer: None, counts: (5, 9, None) },
    Printed { table: 1, params: (65, 7, 32, 2), chen_xie: "63, 62, 61, 60", singleton: "63, 62, 61, 60, 59, 58, 57", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (71, 5, 36, 2), chen_xie: "71, 70, 69, 68", singleton: "71, 70, 69, 68, 67, 66, 65", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (75, 5, 38, 2), chen_xie: "75, 74, 73, 72", singleton: "75, 74, 73, 72, 71, 70, 69", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (77, 5, 39, 2), chen_xie: "77, 76, 75, 74", singleton: "77, 76, 75, 74, 73, 72, 71", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (78, 5, 40, 2), chen_xie: "78, 77, 76, 75", singleton: "79, 78, 77, 76, 75, 74, 73, 72, 71", griesmer: None, counts: (4, 9, None) },
    Printed { table: 1, params: (79, 5, 40, 2), chen_xie: "79, 78, 77, 76", singleton: "79, 78, 77, 76, 75, 74, 73", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (80, 6, 40, 2), chen_xie: "79, 78, 77, 76", singleton: "79, 78, 77, 76, 75, 74, 73", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (83, 5, 42, 2), chen_xie: "83, 82, 81, 80", singleton: "83, 82, 81, 80, 79, 78, 77", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (85, 5, 43, 2), chen_xie: "85, 84, 83, 82", singleton: "85, 84, 83, 82, 81, 80, 79", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (86, 5, 44, 2), chen_xie: "86, 85, 84, 83", singleton: "87, 86, 85, 84, 83, 82, 81, 80, 79", griesmer: None, counts: (4, 9, None) },
    Printed { table: 1, params: (87, 5, 44, 2), chen_xie: "87, 86, 85, 84", singleton: "87, 86, 85, 84, 83, 82, 81", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (88, 6, 44, 2), chen_xie: "87, 86, 85, 84", singleton: "87, 86, 85, 84, 83, 82, 81", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (89, 5, 45, 2), chen_xie: "89, 88, 87, 86", singleton: "89, 88, 87, 86, 85, 84, 83", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (90, 5, 46, 2), chen_xie: "90, 89, 88, 87", singleton: "90, 89, 88, 87, 86, 85, 84, 83", griesmer: None, counts: (4, 8, None) },
    Printed { table: 1, params: (91, 5, 46, 2), chen_xie: "91, 90, 89, 88", singleton: "91, 90, 89, 88, 87, 86, 85", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (92, 5, 47, 2), chen_xie: "92, 91, 90, 89", singleton: "93, 92, 91, 90, 89, 88, 87, 86, 85", griesmer: None, counts: (4, 9, None) },
    Printed { table: 1, params: (92, 6, 46, 2), chen_xie: "91, 90, 89, 88", singleton: "91, 90, 89, 88, 87, 86, 85", griesmer: None, counts: (4, 7, None) },
    Printed { table: 1, params: (93, 5, 48, 2), chen_xie: "93, 92, 91, 90", singleton: "95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85", griesmer: None, counts: (4, 11, None) },
    Printed { table: 2, params: (27, 4, 18, 3), chen_xie: "26, 25", singleton: "26, 25, 24, 23, 22", griesmer: None, counts: (2, 5, None) },
    Printed { table: 2, params: (36, 4, 24, 3), chen_xie: "35, 34", singleton: "35, 34, 33, 32, 31", griesmer: None, counts: (2, 5, None) },
    Printed { table: 2, params: (80, 4, 54, 3), chen_xie: "80, 79, 78", singleton: "80, 79, 78, 77, 76, 75, 74, 73", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (81, 5, 54, 3), chen_xie: "80, 79, 78", singleton: "80, 79, 78, 77, 76, 75, 74, 73", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (107, 4, 72, 3), chen_xie: "107, 106, 105", singleton: "107, 106, 105, 104, 103, 102, 101, 100", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (108, 5, 72, 3), chen_xie: "107, 106, 105", singleton: "107, 106, 105, 104, 103, 102, 101, 100", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (116, 4, 78, 3), chen_xie: "116, 115, 114", singleton: "116, 115, 114, 113, 112, 111, 110, 109", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (117, 5, 78, 3), chen_xie: "116, 115, 114", singleton: "116, 115, 114, 113, 112, 111, 110, 109", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (119, 4, 80, 3), chen_xie: "119, 118, 117", singleton: "119, 118, 117, 116, 115, 114, 113, 112", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (120, 4, 81, 3), chen_xie: "120, 119, 118", singleton: "121, 120, 119, 118, 117, 116, 115, 114, 113, 112", griesmer: None, counts: (3, 10, None) },
    Printed { table: 2, params: (120, 5, 80, 3), chen_xie: "119, 118, 117", singleton: "119, 118, 117, 116, 115, 114, 113, 112", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (121, 5, 81, 3), chen_xie: "120, 119, 118", singleton: "121, 120, 119, 118, 117, 116, 115, 114, 113, 112", griesmer: None, counts: (3, 10, None) },
    Printed { table: 2, params: (134, 4, 90, 3), chen_xie: "134, 133, 132", singleton: "134, 133, 132, 131, 130, 129, 128, 127", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (143, 4, 96, 3), chen_xie: "143, 142, 141", singleton: "143, 142, 141, 140, 139, 138, 137, 136", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (146, 4, 98, 3), chen_xie: "146, 145, 144", singleton: "146, 145, 144, 143, 142, 141, 140, 139", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (147, 4, 99, 3), chen_xie: "147, 146, 145", singleton: "148, 147, 146, 145, 144, 143, 142, 141, 140, 139", griesmer: None, counts: (3, 10, None) },
    Printed { table: 2, params: (152, 4, 102, 3), chen_xie: "152, 151, 150", singleton: "152, 151, 150, 149, 148, 147, 146, 145", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (155, 4, 104, 3), chen_xie: "155, 154, 153", singleton: "155, 154, 153, 152, 151, 150, 149, 148", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (162, 5, 108, 3), chen_xie: "161, 160, 159", singleton: "161, 160, 159, 158, 157, 156, 155, 154", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (189, 5, 126, 3), chen_xie: "188, 187, 186", singleton: "188, 187, 186, 185, 184, 183, 182, 181", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (198, 5, 132, 3), chen_xie: "197, 196, 195", singleton: "197, 196, 195, 194, 193, 192, 191, 190", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (201, 4, 135, 3), chen_xie: "201, 200, 199", singleton: "202, 201, 200, 199, 198, 197, 196, 195, 194, 193", griesmer: None, counts: (3, 10, None) },
    Printed { table: 2, params: (201, 5, 134, 3), chen_xie: "200, 199, 198", singleton: "200, 199, 198, 197, 196, 195, 194, 193", griesmer: None, counts: (3, 8, None) },
    Printed { table: 2, params: (202, 5, 135, 3), chen_xie: "201, 200, 199", singleton: "202, 201, 200, 199, 198, 197, 196, 195, 194, 193", griesmer: None, counts: (3, 10, None) },
    Printed { table: 3, params: (267, 8, 132, 2), chen_xie: "261-263", singleton: "259-263", griesmer: Some("133-135, 167, 183, 191, 195, 197-199, 215, 223, 227, 229-231, 239, 243, 245-247, 251, 253-255, 257-263"), counts: (3, 5, Some(32)) },
    Printed { table: 3, params: (271, 8, 134, 2), chen_xie: "265-267", singleton: "263-267", griesmer: Some("135, 137-139, 171, 187, 195, 199, 201-203, 219, 227, 231, 233-235, 243, 247, 249-251, 255, 257-259, 261-267"), counts: (3, 5, Some(33)) },
    Printed { table: 3, params: (274, 8, 136, 2), chen_xie: "268-271", singleton: "265-271", griesmer: Some("137-143, 159, 167, 171, 173-175, 183, 187, 189-191, 195, 197-199, 201-207, 215, 219, 221-223, 227, 229-231, 233-239, 243, 245-247, 249-255, 257-271"), counts: (4, 7, Some(71)) },
    Printed { table: 3, params: (279, 8, 138, 2), chen_xie: "273-275", singleton: "271-275", griesmer: Some("139, 143, 145-147, 179, 195, 203, 207, 209-211, 227, 235, 239, 241-243, 251, 255, 257-259, 263, 265-267, 269-275"), counts: (3, 5, Some(34)) },
    Printed { table: 3, params: (282, 8, 140, 2), chen_xie: "276-279", singleton: "273-279", griesmer: Some("141-143, 145-151, 167, 175, 179, 181-183, 191, 195, 197-199, 203, 205-207, 209-215, 223, 227, 229-231, 235, 237-239, 241-247, 251, 253-255, 257-263, 265-279"), counts: (4, 7, Some(79)) },
    Printed { table: 3, params: (286, 8, 142, 2), chen_xie: "280-283", singleton: "277-283", griesmer: Some("143, 145-147, 149-155, 171, 179, 183, 185-187, 195, 199, 201-203, 207, 209-211, 213-219, 227, 231, 233-235, 239, 241-243, 245-251, 255, 257-259, 261-267, 269-283"), counts: (4, 7, Some(83)) },
    Printed { table: 3, params: (289, 8, 144, 2), chen_xie: "283-287", singleton: "279-287", griesmer: Some("145-159, 167, 171, 173-175, 179, 181-183, 185-191, 195, 197-199, 201-207, 209-215, 216-223, 227, 229-231, 233-239, 241-247, 248-255, 257-263, 264-271, 272-279, 280-287"), counts: (5, 9, Some(143)) },
];
