#include "mbspec/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "json_io.hpp"

namespace mbspec {

static_assert(std::endian::native == std::endian::little,
              "the MBSPEC01 container assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'M', 'B', 'S', 'P', 'E', 'C', '0', '1'};

json to_json_impl(const SimConfig& c) { return to_json(c); }

std::vector<std::string> field_names(int dim) {
  std::vector<std::string> names;
  for (int a = 0; a < dim; ++a) names.push_back("u" + std::to_string(a));
  names.push_back("theta");
  for (int a = 0; a < dim; ++a) names.push_back("b" + std::to_string(a));
  return names;
}

// canonical (shifted) lattice order <-> DFT storage order
std::vector<std::size_t> canonical_permutation(const Grid& g) {
  const int n = g.n();
  std::vector<std::size_t> perm(g.size());
  auto shift = [n](std::size_t j) { return (j + std::size_t(n / 2)) % n; };
  for (std::size_t pos = 0; pos < g.size(); ++pos) {
    if (g.dim() == 2) {
      std::size_t i = pos / n, j = pos % n;
      perm[pos] = shift(i) * n + shift(j);
    } else {
      std::size_t l = pos % n;
      std::size_t r = pos / n;
      std::size_t j = r % n, i = r / n;
      perm[pos] = (shift(i) * n + shift(j)) * n + shift(l);
    }
  }
  return perm;
}

void write_scalar(std::ofstream& out, const SpectralScalar& f,
                  const std::vector<std::size_t>& perm) {
  std::vector<double> buf(2 * f.size());
  for (std::size_t pos = 0; pos < f.size(); ++pos) {
    const Complex& z = f[perm[pos]];
    buf[2 * pos] = z.real();
    buf[2 * pos + 1] = z.imag();
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(double)));
}

SpectralScalar read_scalar(std::ifstream& in, const Grid& g,
                           const std::vector<std::size_t>& perm) {
  std::vector<double> buf(2 * g.size());
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(double)));
  if (!in) throw DataError("container truncated: array data missing");
  SpectralScalar f(g);
  for (std::size_t pos = 0; pos < g.size(); ++pos)
    f[perm[pos]] = Complex{buf[2 * pos], buf[2 * pos + 1]};
  return f;
}

}  // namespace

void write_checkpoint(const std::string& path, const CheckpointData& data) {
  const Grid& g = data.cfg.grid;
  json header;
  header["meta"] = {{"dim", g.dim()},   {"N", g.n()},
                    {"R", data.cfg.R},  {"s", data.cfg.s},
                    {"t", data.state.t}, {"step", data.step}};
  header["config"] = to_json_impl(data.cfg);
  header["init"] = to_json(data.init);
  header["diag"] = to_json(data.diag);
  header["fields"] = field_names(g.dim());

  const std::string hs = header.dump();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open checkpoint for writing: " + path);
  out.write(kMagic, sizeof(kMagic));
  const std::uint64_t len = hs.size();
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(hs.data(), static_cast<std::streamsize>(hs.size()));

  const auto perm = canonical_permutation(g);
  for (int a = 0; a < g.dim(); ++a) write_scalar(out, data.state.u[a], perm);
  write_scalar(out, data.state.theta, perm);
  for (int a = 0; a < g.dim(); ++a) write_scalar(out, data.state.b[a], perm);
  if (!out) throw DataError("write failure on checkpoint: " + path);
}

CheckpointData read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint: " + path);

  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw DataError("container validation failed: bad magic bytes in " + path);

  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof(len));
  if (!in || len == 0 || len > (1ull << 24))
    throw DataError("container validation failed: implausible header length");

  std::string hs(len, '\0');
  in.read(hs.data(), static_cast<std::streamsize>(len));
  if (!in) throw DataError("container truncated: header missing");

  json header;
  try {
    header = json::parse(hs);
  } catch (const json::exception&) {
    throw DataError("container validation failed: header is not valid JSON");
  }

  CheckpointData data;
  try {
    data.cfg = sim_config_from_json(header.at("config"));
    data.init = initial_spec_from_json(header.at("init"));
    data.diag = diag_state_from_json(header.at("diag"));
    data.step = header.at("meta").at("step").get<int>();
    data.state.t = header.at("meta").at("t").get<double>();
  } catch (const json::exception& e) {
    throw DataError(std::string("container validation failed: ") + e.what());
  }

  const Grid& g = data.cfg.grid;
  const auto names = field_names(g.dim());
  if (header.at("fields").get<std::vector<std::string>>() != names)
    throw DataError("container validation failed: unexpected field list");

  const auto perm = canonical_permutation(g);
  data.state.u = SpectralVector(g);
  data.state.b = SpectralVector(g);
  for (int a = 0; a < g.dim(); ++a) data.state.u[a] = read_scalar(in, g, perm);
  data.state.theta = read_scalar(in, g, perm);
  for (int a = 0; a < g.dim(); ++a) data.state.b[a] = read_scalar(in, g, perm);

  // no trailing garbage
  char extra;
  in.read(&extra, 1);
  if (!in.eof())
    throw DataError("container validation failed: trailing bytes in " + path);

  if (solenoidal_defect(data.state.u) > 1e-10 ||
      solenoidal_defect(data.state.b) > 1e-10)
    throw DataError("container validation failed: stored fields are not solenoidal");
  data.state.u.set_solenoidal(true);
  data.state.b.set_solenoidal(true);
  return data;
}

}  // namespace mbspec
