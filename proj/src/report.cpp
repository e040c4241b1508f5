#include "anagraph/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace anagraph {

namespace {

std::string pair_code(Letter a, Letter b) {
  return std::string{a.to_char(), b.to_char()};
}

nlohmann::json pairs_to_json(const std::vector<std::pair<Letter, Letter>>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto [a, b] : pairs) arr.push_back(pair_code(a, b));
  return arr;
}

std::vector<const CommutatorWitness*> sorted_witnesses(const RunResult& r) {
  std::vector<const CommutatorWitness*> ws;
  ws.reserve(r.witnesses.size());
  for (const auto& w : r.witnesses) ws.push_back(&w);
  std::stable_sort(ws.begin(), ws.end(), [](const CommutatorWitness* a, const CommutatorWitness* b) {
    auto key = [](const CommutatorWitness* w) {
      return std::make_tuple(w->residual() ? 1 : 0, w->iteration, w->alpha, w->beta);
    };
    return key(a) < key(b);
  });
  return ws;
}

std::string iteration_label(const CommutatorWitness& w) {
  return w.residual() ? "manual" : std::to_string(w.iteration);
}

nlohmann::json witness_to_json(const CommutatorWitness& w) {
  nlohmann::json doc;
  doc["alpha"] = std::string(1, w.alpha.to_char());
  doc["beta"] = std::string(1, w.beta.to_char());
  doc["word1"] = w.word1;
  doc["word2"] = w.word2;
  doc["origin1"] = w.origin1;
  doc["origin2"] = w.origin2;
  doc["iteration"] = iteration_label(w);
  doc["certificate1"] = nlohmann::json::parse(certificate_to_json(w.certificate1));
  doc["certificate2"] = nlohmann::json::parse(certificate_to_json(w.certificate2));
  doc["stage"] = pairs_to_json(w.stage.pairs());
  return doc;
}

nlohmann::json verification_to_json(const VerificationReport& v) {
  nlohmann::json doc;
  doc["all_relations_implied"] = v.all_relations_implied;
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& [a, b] : v.failing_pairs) failing.push_back({a, b});
  doc["failing_pairs"] = std::move(failing);
  nlohmann::json maximality = nlohmann::json::array();
  for (const auto& m : v.maximality) {
    maximality.push_back({{"pair", pair_code(m.alpha, m.beta)},
                          {"classes", m.classes_with_both},
                          {"consistent", m.consistent},
                          {"example_pattern", m.example_pattern}});
  }
  doc["maximality"] = std::move(maximality);
  return doc;
}

}  // namespace

PresentationDoc build_presentation(const RunResult& r) {
  PresentationDoc doc;
  doc.relation_pairs = r.commutators.pairs();
  doc.missing_pairs = r.missing;
  doc.right_angled_artin = (r.residual_phase_ran || r.verification_ran) &&
                           r.verification.all_relations_implied;
  return doc;
}

std::string emit_presentation(const RunResult& r, DocFormat format) {
  PresentationDoc doc = build_presentation(r);
  if (format == DocFormat::kJson) {
    nlohmann::json j;
    j["schema"] = "anagraph.presentation/1";
    std::string generators;
    for (int i = 0; i < doc.alphabet; ++i) generators.push_back(Letter(i).to_char());
    j["generators"] = generators;
    j["relations"] = pairs_to_json(doc.relation_pairs);
    j["missing"] = pairs_to_json(doc.missing_pairs);
    j["right_angled_artin"] = doc.right_angled_artin;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "anagram group presentation";
  if (!r.source_name.empty()) out << " (" << r.source_name << ")";
  out << "\n";
  out << "generators:";
  for (int i = 0; i < doc.alphabet; ++i) out << ' ' << Letter(i).to_char();
  out << "\n";
  const int total = doc.alphabet * (doc.alphabet - 1) / 2;
  out << "commuting pairs: " << doc.relation_pairs.size() << " of " << total << "\n";
  for (auto [a, b] : doc.relation_pairs) out << "  [" << a.to_char() << "," << b.to_char() << "]\n";
  out << "missing pairs: " << doc.missing_pairs.size() << ", grouped by letter:\n";
  for (int i = 0; i < doc.alphabet; ++i) {
    Letter l(i);
    std::string partners;
    for (auto [a, b] : doc.missing_pairs) {
      if (a == l) partners += std::string(" ") + b.to_char();
      if (b == l) partners += std::string(" ") + a.to_char();
    }
    if (!partners.empty()) out << "  " << l.to_char() << ":" << partners << "\n";
  }
  out << "classification: "
      << (doc.right_angled_artin
              ? "right-angled Artin group (all anagram relations follow from the commutators)"
              : "undetermined (unresolved relations remain)")
      << "\n";
  return out.str();
}

PresentationDoc parse_presentation(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  PresentationDoc doc;
  doc.alphabet = static_cast<int>(j.at("generators").get<std::string>().size());
  auto read_pairs = [&](const char* field) {
    std::vector<std::pair<Letter, Letter>> pairs;
    for (const auto& code : j.at(field)) {
      const std::string s = code.get<std::string>();
      pairs.emplace_back(Letter::from_char(s.at(0)), Letter::from_char(s.at(1)));
    }
    return pairs;
  };
  doc.relation_pairs = read_pairs("relations");
  doc.missing_pairs = read_pairs("missing");
  doc.right_angled_artin = j.at("right_angled_artin").get<bool>();
  return doc;
}

std::string emit_witness_table(const RunResult& r, TableFormat format) {
  auto ws = sorted_witnesses(r);
  std::ostringstream out;
  if (format == TableFormat::kCsv) {
    out << "iteration,alpha,beta,word1,word2\n";
    for (const auto* w : ws) {
      out << iteration_label(*w) << ',' << w->alpha.to_char() << ',' << w->beta.to_char() << ','
          << w->word1 << ',' << w->word2 << "\n";
    }
    return out.str();
  }
  std::size_t w1 = 5, w2 = 5;
  for (const auto* w : ws) {
    w1 = std::max(w1, w->word1.size());
    w2 = std::max(w2, w->word2.size());
  }
  out << std::left << std::setw(10) << "iteration" << std::setw(7) << "alpha" << std::setw(6)
      << "beta" << std::setw(w1 + 2) << "word1" << "word2\n";
  for (const auto* w : ws) {
    out << std::left << std::setw(10) << iteration_label(*w) << std::setw(7) << w->alpha.to_char()
        << std::setw(6) << w->beta.to_char() << std::setw(w1 + 2) << w->word1 << w->word2 << "\n";
  }
  return out.str();
}

std::string emit_progress(const RunResult& r, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::kCsv) {
    out << "iteration,anagraphs,cumulative_commutators\n";
    for (const auto& s : r.stats) {
      out << s.iteration << ',' << s.bucket_count << ',' << s.cumulative_commutators << "\n";
    }
    return out.str();
  }
  out << std::left << std::setw(11) << "iteration" << std::setw(11) << "anagraphs"
      << "commutators\n";
  for (const auto& s : r.stats) {
    out << std::left << std::setw(11) << s.iteration << std::setw(11) << s.bucket_count
        << s.cumulative_commutators << "\n";
  }
  return out.str();
}

std::string emit_verification(const RunResult& r, DocFormat format) {
  const VerificationReport& v = r.verification;
  if (format == DocFormat::kJson) {
    nlohmann::json j = verification_to_json(v);
    j["schema"] = "anagraph.verification/1";
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "containment verification\n";
  out << "all relations implied: " << (v.all_relations_implied ? "yes" : "no") << "\n";
  out << "failing pairs: " << v.failing_pairs.size() << "\n";
  for (const auto& [a, b] : v.failing_pairs) out << "  " << a << " = " << b << "\n";
  out << "maximality (projection patterns of missing pairs):\n";
  for (const auto& m : v.maximality) {
    out << "  [" << m.alpha.to_char() << "," << m.beta.to_char() << "]: " << m.classes_with_both
        << (m.classes_with_both == 1 ? " class" : " classes")
        << (m.consistent ? ", one pattern per class" : ", INCONSISTENT") << "\n";
  }
  return out.str();
}

std::string emit_certificates(const RunResult& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto* w : sorted_witnesses(r)) arr.push_back(witness_to_json(*w));
  nlohmann::json doc;
  doc["schema"] = "anagraph.certificates/1";
  doc["witnesses"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string run_result_to_json(const RunResult& r) {
  nlohmann::json doc;
  doc["schema"] = "anagraph.result/1";
  doc["source"] = r.source_name;
  doc["commutators"] = pairs_to_json(r.commutators.pairs());
  doc["missing"] = pairs_to_json(r.missing);
  nlohmann::json stats = nlohmann::json::array();
  for (const auto& s : r.stats) {
    stats.push_back({{"iteration", s.iteration},
                     {"anagraphs", s.bucket_count},
                     {"cumulative_commutators", s.cumulative_commutators}});
  }
  doc["stats"] = std::move(stats);
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  doc["witnesses"] = std::move(ws);
  doc["residual_buckets"] = nlohmann::json::parse(store_to_json(r.residual_buckets));
  doc["verification"] = verification_to_json(r.verification);
  doc["residual_phase_ran"] = r.residual_phase_ran;
  doc["verification_ran"] = r.verification_ran;
  return doc.dump(2) + "\n";
}

}  // namespace anagraph
