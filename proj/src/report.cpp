#include "opstruct/report.hpp"

namespace opstruct {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
    case Status::skipped: return "skipped";
    case Status::hypothesis_fail: return "hypothesis_fail";
    case Status::error: return "error";
  }
  return "unknown";
}

void CheckReport::fail(Datum d) {
  witnesses.push_back(std::move(d));
  if (status == Status::pass || status == Status::not_applicable) status = Status::fail;
}

void CheckReport::absorb(const CheckReport& other) {
  values.insert(values.end(), other.values.begin(), other.values.end());
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  if (other.status == Status::not_applicable || other.status == Status::pass) return;
  if (status == Status::pass || status == Status::not_applicable) status = other.status;
}

}  // namespace opstruct
