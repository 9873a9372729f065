#pragma once

#include <iosfwd>
#include <string>

#include "qqpft/analysis.hpp"
#include "qqpft/time_frequency.hpp"

namespace qqpft {

// Binary containers, all little-endian:
//   QSIG1: magic "QSIG1\0\0\0", u32 n, f64 extent, then n*n*4 f64 samples
//          row-major as (r0, r1, r2, r3).
//   QQPF1: magic "QQPF1\0\0\0", u32 n, u32 flags (bits 0/1: chirp warnings),
//          f64 params[10] (A1..E1, A2..E2), f64 xi1_0, dxi1, xi2_0, dxi2,
//          then n*n*4 f64 values.
//   QTF41: magic "QTF41\0\0\0", u32 nx, u32 nxi, f64 x_extent,
//          f64 params[10], f64 xi1_0, dxi1, xi2_0, dxi2, then
//          nx*nx*nxi*nxi*4 f64 values in (x1, x2, xi1, xi2) row-major order.

void write_qsig(const std::string& path, const QSignal2D& f);
QSignal2D read_qsig(const std::string& path);

void write_qqpf(const std::string& path, const QQPFTResult& F);
QQPFTResult read_qqpf(const std::string& path);

void write_qtf4(const std::string& path, const TFGrid4D& F);
TFGrid4D read_qtf4(const std::string& path);

/// Peeks at the 8-byte magic; returns "QSIG1", "QQPF1", "QTF41" or "".
std::string sniff_format(const std::string& path);

/// One row per sample: t1,t2,r0,r1,r2,r3 with 17 significant digits.
void write_signal_csv(const std::string& path, const QSignal2D& f);

/// One fixed-x slice: rows xi1,xi2,|S|,r0,r1,r2,r3.
void write_slice_csv(const std::string& path, const TFGrid4D& F, int ix1, int ix2);
void write_slice_csv(const std::string& path, const QQPFTResult& slice);

/// Tab-separated record: id, lhs, rhs, margin, pass/fail, seed, params; all
/// reals with 17 significant digits.
std::string format_report_line(const VerificationReport& r, std::uint64_t seed,
                               const std::string& params_text);

}  // namespace qqpft
