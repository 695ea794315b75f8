// Acceptance gate: one PASS/FAIL line per criterion.
//
// usage: acceptance CLI GOLDEN_DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uqsl3/suites.hpp"

namespace {

using namespace uqsl3;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run(const std::string& cli, const std::vector<std::string>& args) {
  std::string cmd = "'" + cli + "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

Outcome suites(SuiteRunner<SymbolicField>& runner, const std::vector<std::string>& names) {
  Outcome o;
  for (const auto& n : names) {
    const SuiteResult r = runner.run(n);
    for (const auto& c : r.checks) {
      if (!c.passed) {
        o.passed = false;
        o.detail += " " + n + ":" + c.name;
      }
    }
  }
  return o;
}

Outcome cli(const std::string& exe, const std::string& golden_dir) {
  Outcome o;
  const CommandResult v = run(exe, {"verify"});
  if (v.status != 0) {
    o.passed = false;
    o.detail += " verify exited " + std::to_string(v.status);
  }
  std::ifstream cases(golden_dir + "/cases.txt");
  std::string line;
  int count = 0;
  while (std::getline(cases, line)) {
    if (line.empty()) continue;
    auto args = split(line, '|');
    const std::string file = args.front();
    args.erase(args.begin());
    const std::string expected = slurp(golden_dir + "/" + file);
    const CommandResult a = run(exe, args);
    const CommandResult b = run(exe, args);
    ++count;
    if (a.status != 0 || a.out != b.out || a.out != expected) {
      o.passed = false;
      o.detail += " " + file;
    }
  }
  if (count == 0) {
    o.passed = false;
    o.detail += " no golden cases found";
  }
  o.detail = std::to_string(count) + " golden reports" + o.detail;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI GOLDEN_DIR\n";
    return 2;
  }
  SuiteRunner<SymbolicField> runner{SymbolicField{}};
  struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> suites;
  };
  const std::vector<Criterion> criteria{
      {1, "relations, confluence, associativity", {"pbw"}},
      {2, "action formulas and filtration", {"actions"}},
      {3, "u-family, F1 and C1 closed forms", {"u-family", "f1-c1"}},
      {4, "g-power and ladder", {"g-power"}},
      {5, "Whittaker vector classification", {"solver"}},
      {6, "composition structure and membership", {"structure"}},
      {7, "center and Casimir eigenvalues", {"center"}},
  };
  bool all = true;
  auto report = [&](int id, const std::string& title, const Outcome& o, Clock::time_point start) {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
              << std::setprecision(1) << secs << " s)";
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << std::endl;
  };
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = suites(runner, c.suites);
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    report(c.id, c.title, o, start);
  }
  const auto start = Clock::now();
  report(8, "CLI verify and golden reports", cli(argv[1], argv[2]), start);
  return all ? 0 : 1;
}
