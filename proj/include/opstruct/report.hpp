#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opstruct/rational.hpp"

namespace opstruct {

enum class Status { pass, fail, not_applicable, skipped, hypothesis_fail, error };

std::string_view to_string(Status status);

// One exact quantity, optionally indexed by (i, n).
struct Datum {
  std::string name;
  int i = -1;
  int n = -1;
  Rational value;
};

// Verdict of one check. `values` holds every computed quantity of interest,
// `witnesses` the subset responsible for a failure.
struct CheckReport {
  std::string check;
  Status status = Status::pass;
  std::vector<Datum> values;
  std::vector<Datum> witnesses;
  std::vector<std::string> notes;
  int horizon = -1;

  bool passed() const { return status == Status::pass || status == Status::not_applicable; }

  void record(Datum d) { values.push_back(std::move(d)); }
  // Records d as a failure witness and flips the status to fail.
  void fail(Datum d);
  void note(std::string text) { notes.push_back(std::move(text)); }
  // Merges another report's data, prefixing nothing; status combines.
  void absorb(const CheckReport& other);
};

}  // namespace opstruct
