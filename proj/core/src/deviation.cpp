#include "fic/deviation.hpp"

namespace fic {

DeviationRecord audit(std::string claim, std::string citation,
                      std::string stated, std::string engine, std::string note,
                      std::string provenance) {
  DeviationRecord rec;
  rec.claim = std::move(claim);
  rec.citation = std::move(citation);
  rec.stated = std::move(stated);
  rec.engine = std::move(engine);
  rec.verdict = rec.stated == rec.engine ? Verdict::match : Verdict::mismatch;
  rec.note = std::move(note);
  rec.provenance = std::move(provenance);
  return rec;
}

DeviationRecord skip(std::string claim, std::string citation,
                     std::string note) {
  DeviationRecord rec;
  rec.claim = std::move(claim);
  rec.citation = std::move(citation);
  rec.verdict = Verdict::skipped;
  rec.note = std::move(note);
  rec.provenance = "skipped";
  return rec;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace fic
