#pragma once

#include <string>
#include <vector>

namespace fic {

enum class Verdict { match, mismatch, skipped };

// One audited claim: the source display quoted verbatim, the value it
// states, the value the engine derives, and whether they agree exactly.
struct DeviationRecord {
  std::string claim;       // stable identifier, e.g. "quadric-gamma-ch3-sign"
  std::string citation;    // the audited display, quoted
  std::string stated;      // value as printed in the source
  std::string engine;      // value the engine computes
  Verdict verdict = Verdict::skipped;
  std::string note;        // how the engine value was obtained
  std::string provenance;  // "display", "constraint", "calibration", "skipped"
};

// verdict = match iff stated == engine, byte for byte; callers render both
// sides through the same printer so string equality is value equality.
DeviationRecord audit(std::string claim, std::string citation,
                      std::string stated, std::string engine, std::string note,
                      std::string provenance);

DeviationRecord skip(std::string claim, std::string citation, std::string note);

std::string to_string(Verdict v);

}  // namespace fic
