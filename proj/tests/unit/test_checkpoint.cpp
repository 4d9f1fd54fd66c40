#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mbspec/checkpoint.hpp"
#include "oracles.hpp"

using namespace mbspec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "mbspec_ckpt_test") {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

CheckpointData sample_data() {
  SimConfig cfg;
  cfg.grid = Grid(2, 16);
  cfg.R = 5.0;
  cfg.s = 3.0;
  cfg.dt = 1e-3;
  cfg.t_end = 0.25;
  CheckpointData data;
  data.cfg = cfg;
  data.init.kind = InitialSpec::Kind::random_band;
  data.init.seed = 77;
  data.init.norm_theta = 0.3;
  data.init.norm_b = 0.4;
  data.state = oracle::random_state(cfg, 21);
  data.state.t = 0.125;
  data.step = 125;
  data.diag.has_prev = true;
  data.diag.prev_t = 0.12;
  data.diag.prev_gradu = 1.75;
  data.diag.gradu_integral = 0.31;
  data.diag.Y0 = 1.25;
  data.diag.X0 = 40.5;
  data.diag.u_hs0 = 6.1;
  data.diag.gradtheta0_linf = 0.9;
  for (int i = 0; i < 3; ++i) {
    data.diag.acc[i].has_prev = true;
    data.diag.acc[i].prev_t = 0.12;
    data.diag.acc[i].prev_full = 2.5 + i;
    data.diag.acc[i].prev_relaxed = 1.5 + i;
    data.diag.acc[i].full = 0.7 * (i + 1);
    data.diag.acc[i].relaxed = 0.4 * (i + 1);
  }
  return data;
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("checkpoint round trip is bit-exact") {
  TempDir dir;
  const CheckpointData data = sample_data();
  const fs::path p1 = dir.path / "a.mbspec";
  write_checkpoint(p1.string(), data);

  const CheckpointData loaded = read_checkpoint(p1.string());
  CHECK(loaded.step == data.step);
  CHECK(loaded.state.t == data.state.t);
  CHECK(loaded.cfg.R == data.cfg.R);
  CHECK(loaded.cfg.grid == data.cfg.grid);
  CHECK(loaded.init.seed == data.init.seed);
  CHECK(loaded.diag.gradu_integral == data.diag.gradu_integral);
  for (int i = 0; i < 3; ++i) {
    CHECK(loaded.diag.acc[i].full == data.diag.acc[i].full);
    CHECK(loaded.diag.acc[i].prev_relaxed == data.diag.acc[i].prev_relaxed);
  }
  for (int c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < data.cfg.grid.size(); ++i) {
      CHECK(loaded.state.u[c][i] == data.state.u[c][i]);
      CHECK(loaded.state.b[c][i] == data.state.b[c][i]);
    }
  for (std::size_t i = 0; i < data.cfg.grid.size(); ++i)
    CHECK(loaded.state.theta[i] == data.state.theta[i]);
  CHECK(loaded.state.u.solenoidal());

  // write-read-write produces identical bytes
  const fs::path p2 = dir.path / "b.mbspec";
  write_checkpoint(p2.string(), loaded);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("magic bytes open the container") {
  TempDir dir;
  const fs::path p = dir.path / "c.mbspec";
  write_checkpoint(p.string(), sample_data());
  std::ifstream in(p, std::ios::binary);
  char magic[8];
  in.read(magic, 8);
  CHECK(std::string(magic, 8) == "MBSPEC01");
}

TEST_CASE("corrupt containers are rejected with container-validation errors") {
  TempDir dir;
  const CheckpointData data = sample_data();
  const fs::path good = dir.path / "good.mbspec";
  write_checkpoint(good.string(), data);
  const std::vector<char> bytes = slurp(good);

  auto write_variant = [&](const std::string& name, const std::vector<char>& b) {
    const fs::path p = dir.path / name;
    std::ofstream out(p, std::ios::binary);
    out.write(b.data(), static_cast<std::streamsize>(b.size()));
    return p;
  };

  // bad magic
  std::vector<char> bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(read_checkpoint(write_variant("m.mbspec", bad_magic).string()),
                  DataError);

  // truncated array data
  std::vector<char> truncated(bytes.begin(), bytes.end() - 173);
  CHECK_THROWS_AS(
      read_checkpoint(write_variant("t.mbspec", truncated).string()), DataError);

  // trailing garbage
  std::vector<char> trailing = bytes;
  trailing.push_back('\0');
  CHECK_THROWS_AS(
      read_checkpoint(write_variant("g.mbspec", trailing).string()), DataError);

  // header corrupted into invalid JSON
  std::vector<char> bad_header = bytes;
  bad_header[17] = '}';
  CHECK_THROWS_AS(
      read_checkpoint(write_variant("h.mbspec", bad_header).string()), DataError);

  // missing file
  CHECK_THROWS_AS(read_checkpoint((dir.path / "absent.mbspec").string()),
                  DataError);
}
