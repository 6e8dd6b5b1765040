#include "weylmech/numeric/snapshot_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace weylmech::numeric {

namespace {

constexpr std::array<char, 8> kMagic{'W', 'E', 'Y', 'L', 'S', 'N', 'A', 'P'};

template <typename U>
void put_le(std::ostream& out, U v) {
  std::array<char, sizeof(U)> b{};
  for (std::size_t k = 0; k < sizeof(U); ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xFF);
  out.write(b.data(), b.size());
}

void put_f64(std::ostream& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }

template <typename U>
U get_le(std::istream& in) {
  std::array<unsigned char, sizeof(U)> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) throw std::runtime_error("snapshot truncated");
  U v = 0;
  for (std::size_t k = 0; k < sizeof(U); ++k) v |= static_cast<U>(b[k]) << (8 * k);
  return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_le<std::uint64_t>(in)); }

void write_common(std::ostream& out, std::uint32_t kind, const GridSpec& g, Role role, const ComplexMatrix& data) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kSnapshotVersion);
  put_le<std::uint32_t>(out, kind);
  put_le<std::uint64_t>(out, g.n);
  put_f64(out, g.x_min);
  put_f64(out, g.x_max);
  put_f64(out, g.hbar);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(role));
  for (Eigen::Index i = 0; i < data.rows(); ++i)
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      put_f64(out, data(i, j).real());
      put_f64(out, data(i, j).imag());
    }
  if (!out) throw std::runtime_error("failed writing snapshot");
}

void set_csv_format(std::ostream& out) { out << std::setprecision(17); }

}  // namespace

void write_snapshot(std::ostream& out, const PhaseField& f) { write_common(out, 0, f.grid, f.role, f.values); }
void write_snapshot(std::ostream& out, const OperatorMatrix& m) { write_common(out, 1, m.grid, m.role, m.entries); }

void write_snapshot(const std::filesystem::path& path, const Snapshot& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  std::visit([&](const auto& v) { write_snapshot(out, v); }, s);
}

Snapshot read_snapshot(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw std::runtime_error("not a snapshot file");
  if (get_le<std::uint32_t>(in) != kSnapshotVersion) throw std::runtime_error("unsupported snapshot version");
  const auto kind = get_le<std::uint32_t>(in);
  if (kind > 1) throw std::runtime_error("unknown snapshot kind");
  GridSpec g;
  g.n = get_le<std::uint64_t>(in);
  g.x_min = get_f64(in);
  g.x_max = get_f64(in);
  g.hbar = get_f64(in);
  const auto role = get_le<std::uint32_t>(in);
  if (role > 3) throw std::runtime_error("unknown role tag");
  g.validate();
  ComplexMatrix data(g.n, g.n);
  for (Eigen::Index i = 0; i < data.rows(); ++i)
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      const double re = get_f64(in);
      const double im = get_f64(in);
      data(i, j) = {re, im};
    }
  if (kind == 0) return PhaseField(g, std::move(data), static_cast<Role>(role));
  return OperatorMatrix(g, std::move(data), static_cast<Role>(role));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_snapshot(in);
}

void write_csv(std::ostream& out, const PhaseField& f) {
  set_csv_format(out);
  out << "q,p,value\n";
  for (std::size_t i = 0; i < f.grid.n; ++i)
    for (std::size_t k = 0; k < f.grid.n; ++k)
      out << f.grid.x(i) << ',' << f.grid.p(k) << ',' << f.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)).real() << '\n';
}

void write_csv(std::ostream& out, const OperatorMatrix& m) {
  set_csv_format(out);
  out << "x,y,kernel\n";
  for (std::size_t i = 0; i < m.grid.n; ++i)
    for (std::size_t j = 0; j < m.grid.n; ++j) out << m.grid.x(i) << ',' << m.grid.x(j) << ',' << m.kernel(i, j).real() << '\n';
}

}  // namespace weylmech::numeric
