#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sutwist {

struct ReportItem {
  std::string name;
  std::string expected;
  std::string actual;
  std::string basis;  // "paper", "derived" or "trivial"
  bool pass = false;
};

struct Report {
  std::vector<ReportItem> items;

  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  void add(std::string name, std::string expected, std::string actual, std::string basis,
           bool ok) {
    items.push_back({std::move(name), std::move(expected), std::move(actual), std::move(basis), ok});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& i : items)
      arr.push_back({{"name", i.name},
                     {"expected", i.expected},
                     {"actual", i.actual},
                     {"basis", i.basis},
                     {"pass", i.pass}});
    return {{"status", pass() ? "pass" : "fail"}, {"items", arr}};
  }

  std::string to_text() const {
    std::string s;
    for (const auto& i : items)
      s += std::string(i.pass ? "PASS " : "FAIL ") + i.name + ": expected " + i.expected +
           ", got " + i.actual + "\n";
    s += std::string("status: ") + (pass() ? "pass" : "fail") + "\n";
    return s;
  }
};

}  // namespace sutwist
