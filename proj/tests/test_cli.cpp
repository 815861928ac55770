#include "tforge/cli.hpp"
#include "tforge/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace tforge;

namespace
{
  struct Result
  {
    int code = 0;
    io::Json report;
    std::string err;
  };

  std::string data(const std::string &name) { return std::string(TFORGE_DATA_DIR) + "/" + name; }

  Result run(const std::vector<std::string> &args)
  {
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.err = err.str();
    if (!out.str().empty())
      r.report = io::Json::parse(out.str());
    return r;
  }
} // namespace

TEST_CASE("validate accepts bundled data")
{
  const Result r = run({"validate", "--algebra", data("sl2.json"), "--modules", data("sl2_irreps.json")});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.report["schema"] == io::kSchema);
  CHECK(r.report["status"] == "ok");
  CHECK(r.report["command"] == "validate");
}

TEST_CASE("input errors exit with code 2")
{
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"validate", "--algebra", data("missing.json")}).code == cli::kInputError);
  CHECK(run({"lie-m", "--algebra", data("sl2.json"), "--modules", data("sl2_L1.json"), "--depth", "0"}).code
        == cli::kInputError);
  CHECK(run({"lie-m", "--algebra", data("sl2.json")}).code == cli::kInputError);
}

TEST_CASE("lie-m reports dimension and stabilization")
{
  const Result r2 = run({"lie-m", "--algebra", data("sl2.json"), "--modules", data("sl2_L1.json"), "--depth", "2"});
  REQUIRE(r2.code == cli::kSuccess);
  CHECK(r2.report["lie_m_dim"] == 3);
  CHECK(r2.report["algebra_image_contained"] == true);
  const Result r3 = run({"lie-m", "--algebra", data("sl2.json"), "--modules", data("sl2_L1.json"), "--depth", "3"});
  CHECK(r3.report["stabilized"] == true);
}

TEST_CASE("bch on Heisenberg and rejection on sl2")
{
  const Result ok = run({"bch", "--algebra", data("heisenberg.json"), "--modules", data("heisenberg_V.json"), "--input",
                         data("bch_heisenberg.json")});
  REQUIRE(ok.code == cli::kSuccess);
  CHECK(ok.report.dump().find("1/2") != std::string::npos);
  const Result bad = run({"bch", "--algebra", data("sl2.json"), "--input", data("bch_heisenberg.json")});
  CHECK(bad.code == cli::kRejected);
  CHECK(bad.report["status"] == "rejected");
  CHECK(bad.report.contains("witness"));
}

TEST_CASE("toric faces of N^2")
{
  const Result r = run({"toric-faces", "--input", data("monoid_N2.json"), "--seed", "3"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.report["seed"] == 3);
  CHECK(r.report["report"]["face_count"] == 4);
}

TEST_CASE("jordan, peter-weyl and mc")
{
  const Result j = run({"jordan", "--input", data("jordan_unipotent.json")});
  REQUIRE(j.code == cli::kSuccess);
  CHECK(j.report.contains("s"));
  CHECK(j.report.contains("n"));
  const Result p = run({"peter-weyl", "--algebra", data("sl2.json"), "--modules", data("sl2_irreps.json"), "--degree", "6"});
  REQUIRE(p.code == cli::kSuccess);
  CHECK(p.report["expected_dim"] == 14);
  CHECK(p.report["achieved_rank"] == 14);
  const Result m = run({"mc", "--algebra", data("sl2.json"), "--modules", data("sl2_L1.json"), "--input", data("mc_sl2.json"),
                        "--degree", "3"});
  REQUIRE(m.code == cli::kSuccess);
  CHECK(m.report["valuation"] == 1);
}

TEST_CASE("identical invocations produce identical bytes")
{
  const std::vector<std::string> args{"toric-faces", "--algebra", data("sl2.json"), "--modules", data("sl2_L1.json"),
                                      "--input", data("sl2_weights.json"), "--seed", "9"};
  std::ostringstream a, b, err;
  CHECK(cli::run(args, a, err) == cli::kSuccess);
  CHECK(cli::run(args, b, err) == cli::kSuccess);
  CHECK(a.str() == b.str());
}
