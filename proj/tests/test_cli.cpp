#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using json   = nlohmann::json;

namespace {

  struct Run {
    int         code;
    std::string out;
    json        doc;
  };

  std::string quote(std::string const& s) {
    std::string out = "'";
    for (char c : s) {
      out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return out + "'";
  }

  Run run(std::vector<std::string> const& args, bool discard_stderr = true) {
    std::string cmd = VARLAT_BIN;
    for (auto const& a : args) {
      cmd += " " + quote(a);
    }
    if (discard_stderr) {
      cmd += " 2>/dev/null";
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char        buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
      out.append(buf, n);
    }
    int const status = pclose(pipe);
    Run       r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
    r.doc = json::parse(out, nullptr, false);
    return r;
  }

  struct ScratchDir {
    fs::path path = fs::temp_directory_path() / ("varlat-cli-" + std::to_string(::getpid()));
    ScratchDir() {
      fs::create_directories(path);
    }
    ~ScratchDir() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  };

  fs::path scratch(std::string const& name) {
    static ScratchDir dir;
    return dir.path / name;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

}  // namespace

TEST_CASE("classify") {
  auto const r = run({"classify", "G(1)+C(1)+I"});
  REQUIRE(r.code == 0);
  auto const& res = r.doc["result"];
  CHECK(res["upper_modular"] == true);
  CHECK(res["codistributive"] == true);
  CHECK(res["costandard"] == true);
  CHECK(res["neutral"] == false);
  CHECK(res["matched_clause"] == "(ii)");
  CHECK(r.doc["caps"]["max_letters"].is_number());
  CHECK(r.doc["command"] == "classify");

  CHECK(run({"classify", "G(1)+C(1)+I", "--expect", "neutral"}).code == 1);
  CHECK(run({"classify", "G(1)+C(1)+I", "--expect", "costandard"}).code == 0);
  CHECK(run({"classify", "G(1)+C(1)+I", "--expect", "bogus"}).code == 2);
  CHECK(run({"classify", "COM"}).doc["result"]["modular"] == "top");
}

TEST_CASE("entails") {
  auto const r = run({"entails", "--basis", "N{p=4; x^2*y = x*y^2}", "x^2*y*z = 0"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["entails"] == true);
  auto const no = run({"entails", "--basis", "N{p=4; x^2*y*z = 0, x^2*y = x*y^2}", "x^2*y = 0",
                       "--expect"});
  CHECK(no.code == 1);
  CHECK(no.doc["result"]["entails"] == false);
  // Without --expect a negative answer is still a success.
  CHECK(run({"entails", "--basis", "N{p=4}", "x^2 = 0"}).code == 0);
  auto const split = run({"entails", "--basis", "N{p=4}", "x*y = x"});
  CHECK(split.doc["result"]["split_zero"].size() == 2);
}

TEST_CASE("input errors exit with 2") {
  auto const bad = run({"entails", "--basis", "N{p=4}", "x^2*y == 0"});
  CHECK(bad.code == 2);
  CHECK(bad.doc["error"]["kind"] == "syntax");
  CHECK(run({"classify", "K_2"}).doc["error"]["kind"] == "invalid-index");
  CHECK(run({"classify", "K_2"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"join", "G(2)+I", "SL"}).code == 2);
  CHECK(run({"invariants", "COM"}).code == 0);
  CHECK(run({"lattice-check", "--order", "/nonexistent/file"}).code == 2);
  CHECK(run({"join", "N{p=3}", "I"}).doc["error"]["kind"] == "unsupported");
}

TEST_CASE("caps exit with 3") {
  auto const r = run({"--max-letters", "2", "entails", "--basis", "N{p=3}", "x*y*z = 0"});
  CHECK(r.code == 3);
  CHECK(r.doc["error"]["kind"] == "cap-exceeded");
  CHECK(run({"sublattice", "--seed", "G(2)", "--seed", "G(3)", "--lattice-cap", "3"}).code == 3);
  CHECK(run({"--max-p", "3", "entails", "--basis", "N{p=4}", "x = 0"}).code == 3);
  CHECK(run({"degree", "--basis", "N{p=2}", "--bound", "4", "--max-letters", "3"}).code == 3);
}

TEST_CASE("invariants, degree, join, meet, equal") {
  auto const inv = run({"invariants", "G(6)+C(2)+K_5"});
  REQUIRE(inv.code == 0);
  CHECK(inv.doc["result"]["gr"] == 6);
  CHECK(inv.doc["result"]["m"] == 2);
  CHECK(inv.doc["result"]["canonical"] == true);

  auto const deg = run({"degree", "--basis", "N{p=3; x^2*y = 0, x*y*z*t*u = 0}"});
  CHECK(deg.doc["result"]["degree"]["kind"] == "exact");
  CHECK(deg.doc["result"]["degree"]["n"] == 5);
  CHECK(run({"degree", "K"}).doc["result"]["degree"]["kind"] == "above-bound");
  CHECK(run({"degree", "COM"}).doc["result"]["degree"]["kind"] == "infinite");

  CHECK(run({"join", "G(2)+C(1)+L_2", "G(3)+K_3"}).doc["result"]["result"]
        == "G(6) + C(1) + K_3");
  CHECK(run({"meet", "G(6)+C(2)+K", "G(4)+C(1)+K_4"}).doc["result"]["result"]
        == "G(2) + C(1) + K_4");
  CHECK(run({"join", "SL", "COM"}).doc["result"]["result"] == "COM");
  CHECK(run({"equal", "C(0)+N{p=3; x^2*y = 0}", "K", "--expect"}).code == 0);
  CHECK(run({"equal", "SL+K_3", "SL+K_4", "--expect"}).code == 1);
}

TEST_CASE("sublattice with DOT output") {
  auto const dot = scratch("sub.dot");
  auto const ord = scratch("sub.order");
  auto const r   = run({"sublattice", "--seed", "SL", "--seed", "G(2)+C(0)+T", "--emit-dot",
                        dot.string(), "--emit-order", ord.string()});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["size"] == 4);
  std::string const text = slurp(dot);
  CHECK(text.find("digraph") == 0);
  CHECK(text.find("label=\"G(2) + C(1) + T\"") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '>') == 4);

  // The order file feeds lattice-check.
  auto const lc = run({"lattice-check", "--order", ord.string(), "--expect"});
  CHECK(lc.code == 0);
  CHECK(lc.doc["result"]["distributive"] == true);
  CHECK(lc.doc["result"]["elements"].size() == 4);
}

TEST_CASE("lattice-check on N5") {
  auto const path = scratch("n5.order");
  std::ofstream(path) << "# pentagon: 0 < a < b < 1, c aside\n5\n"
                         "1 1 1 1 1\n0 1 1 0 1\n0 0 1 0 1\n0 0 0 1 1\n0 0 0 0 1\n";
  auto const all = run({"lattice-check", "--order", path.string(), "--expect"});
  CHECK(all.code == 1);
  CHECK(all.doc["result"]["distributive"] == false);
  auto const one = run({"lattice-check", "--order", path.string(), "--element", "0", "--kind",
                        "neutral", "--expect"});
  CHECK(one.code == 0);
  auto const w = run({"lattice-check", "--order", path.string(), "--element", "1", "--kind",
                      "distributive"});
  auto const& prop = w.doc["result"]["elements"][0]["properties"]["distributive"];
  CHECK(prop["holds"] == false);
  CHECK(prop["witness"].size() == 2);
  CHECK(run({"lattice-check", "--order", path.string(), "--kind", "wrong"}).code == 2);

  auto const bow = scratch("bow.order");
  std::ofstream(bow) << "4\n1 0 1 1\n0 1 1 1\n0 0 1 0\n0 0 0 1\n";
  auto const nl = run({"lattice-check", "--order", bow.string()});
  CHECK(nl.code == 2);
  CHECK(nl.doc["error"]["kind"] == "not-a-lattice");
}

TEST_CASE("table-check and table export") {
  auto const path = scratch("k.table");
  auto const ex   = run({"table-check", "--basis", "N{p=3; x^2*y = 0}", "--letters", "1",
                         "--emit-table", path.string(), "x^2 = 0"});
  REQUIRE(ex.code == 0);
  CHECK(ex.doc["result"]["order"] == 3);
  CHECK(ex.doc["result"]["identities"][0]["holds"] == false);
  auto const back = run({"table-check", "--table", path.string(), "x^3 = 0", "--expect"});
  CHECK(back.code == 0);
  CHECK(back.doc["result"]["associative"] == true);
  CHECK(back.doc["result"]["zero"] == 0);
  CHECK(run({"table-check", "--table", path.string(), "x^2 = 0", "--expect"}).code == 1);

  auto const nonassoc = scratch("bad.table");
  std::ofstream(nonassoc) << "2\n0 1\n0 0\n";
  auto const na = run({"table-check", "--table", nonassoc.string(), "--expect"});
  CHECK(na.code == 1);
  CHECK(na.doc["result"]["associative"] == false);
  auto const group = scratch("z2.table");
  std::ofstream(group) << "2\n0 1\n1 0\n";
  CHECK(run({"table-check", "--table", group.string(), "x = 0"}).doc["error"]["kind"]
        == "no-zero-element");
}

TEST_CASE("catalog") {
  auto const dot = scratch("cat.dot");
  auto const r   = run({"catalog", "--max-index", "5", "--emit-dot", dot.string()});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["distributive"] == true);
  CHECK(r.doc["result"]["elements"][0]["name"] == "T");
  CHECK(slurp(dot).find("K_5") != std::string::npos);
}

TEST_CASE("output is deterministic and stdout stays machine-readable") {
  std::vector<std::string> const args{"--verbose", "sublattice", "--seed", "SL", "--seed",
                                      "C(2)",      "--seed",     "K_4"};
  auto const a = run(args);
  auto const b = run(args);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.doc.is_discarded());
  // Verbose text goes to stderr only.
  std::string cmd = std::string(VARLAT_BIN) + " --verbose classify SL 2>&1 1>/dev/null";
  FILE*       p   = popen(cmd.c_str(), "r");
  char        buf[256]{};
  std::size_t n = fread(buf, 1, sizeof buf - 1, p);
  pclose(p);
  CHECK(std::string(buf, n).find("upper-modular") != std::string::npos);
}
