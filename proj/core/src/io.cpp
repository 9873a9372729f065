#include "qqpft/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace qqpft {

static_assert(std::endian::native == std::endian::little,
              "binary containers are little-endian; big-endian hosts are unsupported");

namespace {

constexpr char kMagicSig[8] = {'Q', 'S', 'I', 'G', '1', 0, 0, 0};
constexpr char kMagicSpec[8] = {'Q', 'Q', 'P', 'F', '1', 0, 0, 0};
constexpr char kMagicTf[8] = {'Q', 'T', 'F', '4', '1', 0, 0, 0};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void put_f64(std::ostream& out, double v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}
double get_f64(std::istream& in) {
  double v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}

void put_values(std::ostream& out, const std::vector<Quaternion>& v) {
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(Quaternion)));
}
void get_values(std::istream& in, std::vector<Quaternion>& v) {
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(v.size() * sizeof(Quaternion)));
}

void check_magic(std::istream& in, const char (&magic)[8], const std::string& path) {
  char buf[8] = {};
  in.read(buf, 8);
  if (!in || std::memcmp(buf, magic, 8) != 0)
    throw std::runtime_error("bad or unexpected file magic in " + path);
}

void put_params(std::ostream& out, const ParamPair& P) {
  for (double v : {P.l1.a, P.l1.b, P.l1.c, P.l1.d, P.l1.e, P.l2.a, P.l2.b, P.l2.c, P.l2.d, P.l2.e})
    put_f64(out, v);
}
ParamPair get_params(std::istream& in) {
  double v[10];
  for (double& x : v) x = get_f64(in);
  return {{v[0], v[1], v[2], v[3], v[4]}, {v[5], v[6], v[7], v[8], v[9]}};
}

void require_good(std::istream& in, const std::string& path) {
  if (!in) throw std::runtime_error("truncated or unreadable file: " + path);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_qsig(const std::string& path, const QSignal2D& f) {
  auto out = open_out(path);
  out.write(kMagicSig, 8);
  put_u32(out, static_cast<std::uint32_t>(f.n()));
  put_f64(out, f.spec().extent);
  put_values(out, f.samples());
  if (!out) throw std::runtime_error("write failed: " + path);
}

QSignal2D read_qsig(const std::string& path) {
  auto in = open_in(path);
  check_magic(in, kMagicSig, path);
  const int n = static_cast<int>(get_u32(in));
  const double extent = get_f64(in);
  require_good(in, path);
  QSignal2D f(GridSpec(n, extent));
  get_values(in, f.samples());
  require_good(in, path);
  return f;
}

void write_qqpf(const std::string& path, const QQPFTResult& F) {
  auto out = open_out(path);
  out.write(kMagicSpec, 8);
  put_u32(out, static_cast<std::uint32_t>(F.n()));
  put_u32(out, (F.chirp_warning[0] ? 1u : 0u) | (F.chirp_warning[1] ? 2u : 0u));
  put_params(out, F.params);
  put_f64(out, F.freq.xi1[0]);
  put_f64(out, F.freq.dxi1);
  put_f64(out, F.freq.xi2[0]);
  put_f64(out, F.freq.dxi2);
  put_values(out, F.values);
  if (!out) throw std::runtime_error("write failed: " + path);
}

QQPFTResult read_qqpf(const std::string& path) {
  auto in = open_in(path);
  check_magic(in, kMagicSpec, path);
  const int n = static_cast<int>(get_u32(in));
  const std::uint32_t flags = get_u32(in);
  const ParamPair P = get_params(in);
  const double xi1_0 = get_f64(in);
  const double dxi1 = get_f64(in);
  const double xi2_0 = get_f64(in);
  const double dxi2 = get_f64(in);
  require_good(in, path);
  QQPFTResult F{P, FreqGridSpec::uniform(n, xi1_0, dxi1, xi2_0, dxi2), {}, {}};
  F.chirp_warning = {(flags & 1u) != 0, (flags & 2u) != 0};
  F.values.resize(static_cast<std::size_t>(n) * n);
  get_values(in, F.values);
  require_good(in, path);
  return F;
}

void write_qtf4(const std::string& path, const TFGrid4D& F) {
  auto out = open_out(path);
  out.write(kMagicTf, 8);
  put_u32(out, static_cast<std::uint32_t>(F.xspec().n));
  put_u32(out, static_cast<std::uint32_t>(F.xispec().n()));
  put_f64(out, F.xspec().extent);
  put_params(out, F.params());
  put_f64(out, F.xispec().xi1[0]);
  put_f64(out, F.xispec().dxi1);
  put_f64(out, F.xispec().xi2[0]);
  put_f64(out, F.xispec().dxi2);
  put_values(out, F.values());
  if (!out) throw std::runtime_error("write failed: " + path);
}

TFGrid4D read_qtf4(const std::string& path) {
  auto in = open_in(path);
  check_magic(in, kMagicTf, path);
  const int nx = static_cast<int>(get_u32(in));
  const int nxi = static_cast<int>(get_u32(in));
  const double extent = get_f64(in);
  const ParamPair P = get_params(in);
  const double xi1_0 = get_f64(in);
  const double dxi1 = get_f64(in);
  const double xi2_0 = get_f64(in);
  const double dxi2 = get_f64(in);
  require_good(in, path);
  TFGrid4D F(GridSpec(nx, extent), FreqGridSpec::uniform(nxi, xi1_0, dxi1, xi2_0, dxi2), P);
  get_values(in, F.values());
  require_good(in, path);
  return F;
}

std::string sniff_format(const std::string& path) {
  auto in = open_in(path);
  char buf[8] = {};
  in.read(buf, 8);
  if (!in) return "";
  if (std::memcmp(buf, kMagicSig, 8) == 0) return "QSIG1";
  if (std::memcmp(buf, kMagicSpec, 8) == 0) return "QQPF1";
  if (std::memcmp(buf, kMagicTf, 8) == 0) return "QTF41";
  return "";
}

void write_signal_csv(const std::string& path, const QSignal2D& f) {
  auto out = open_out(path);
  out << "t1,t2,r0,r1,r2,r3\n";
  for (int m1 = 0; m1 < f.n(); ++m1)
    for (int m2 = 0; m2 < f.n(); ++m2) {
      const Quaternion& q = f.at(m1, m2);
      out << fmt17(f.spec().coord(m1)) << ',' << fmt17(f.spec().coord(m2)) << ',' << fmt17(q.r0)
          << ',' << fmt17(q.r1) << ',' << fmt17(q.r2) << ',' << fmt17(q.r3) << '\n';
    }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_slice_csv(const std::string& path, const TFGrid4D& F, int ix1, int ix2) {
  if (ix1 < 0 || ix1 >= F.xspec().n || ix2 < 0 || ix2 >= F.xspec().n)
    throw std::invalid_argument("write_slice_csv: slice index out of range");
  auto out = open_out(path);
  out << "xi1,xi2,abs,r0,r1,r2,r3\n";
  const int nxi = F.xispec().n();
  for (int k1 = 0; k1 < nxi; ++k1)
    for (int k2 = 0; k2 < nxi; ++k2) {
      const Quaternion& q = F.at(ix1, ix2, k1, k2);
      out << fmt17(F.xispec().xi1[k1]) << ',' << fmt17(F.xispec().xi2[k2]) << ','
          << fmt17(modulus(q)) << ',' << fmt17(q.r0) << ',' << fmt17(q.r1) << ',' << fmt17(q.r2)
          << ',' << fmt17(q.r3) << '\n';
    }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_slice_csv(const std::string& path, const QQPFTResult& slice) {
  auto out = open_out(path);
  out << "xi1,xi2,abs,r0,r1,r2,r3\n";
  const int n = slice.n();
  for (int k1 = 0; k1 < n; ++k1)
    for (int k2 = 0; k2 < n; ++k2) {
      const Quaternion& q = slice.at(k1, k2);
      out << fmt17(slice.freq.xi1[k1]) << ',' << fmt17(slice.freq.xi2[k2]) << ','
          << fmt17(modulus(q)) << ',' << fmt17(q.r0) << ',' << fmt17(q.r1) << ',' << fmt17(q.r2)
          << ',' << fmt17(q.r3) << '\n';
    }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string format_report_line(const VerificationReport& r, std::uint64_t seed,
                               const std::string& params_text) {
  std::string line = r.inequality_id;
  line += '\t';
  line += fmt17(r.lhs);
  line += '\t';
  line += fmt17(r.rhs);
  line += '\t';
  line += fmt17(r.margin);
  line += '\t';
  line += r.passed ? "pass" : "fail";
  line += '\t';
  line += std::to_string(seed);
  line += '\t';
  line += params_text;
  line += '\n';
  return line;
}

}  // namespace qqpft
