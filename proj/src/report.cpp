#include "lcv/report.hpp"

#include <algorithm>
#include <ostream>

#include "lcv/version.hpp"

namespace lcv {

namespace {

using nlohmann::ordered_json;

ordered_json header(std::string_view command, FamilyId family) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = std::string(tool_version());
  j["command"] = std::string(command);
  j["family"] = std::string(family_name(family));
  return j;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["kind"] = to_string(w.kind);
  j["depth"] = w.depth;
  j["index"] = w.index ? ordered_json(*w.index) : ordered_json(nullptr);
  j["partner"] = w.partner ? ordered_json(*w.partner) : ordered_json(nullptr);
  j["degree"] = w.degree ? ordered_json(*w.degree) : ordered_json(nullptr);
  j["value"] = lcv::to_string(w.value);
  return j;
}

std::string target_label(const VerdictEntry& e) {
  if (e.n) return "n=" + std::to_string(*e.n);
  return "window=" + std::to_string(e.window_lo.value_or(0)) + ".." +
         std::to_string(e.window_hi.value_or(0));
}

std::string csv_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::vector<CoefficientRow> rows_of(FamilyId family, const std::vector<IntPolynomial>& polys) {
  (void)family;
  std::vector<CoefficientRow> rows;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    CoefficientRow r;
    r.n = static_cast<int>(i) + 1;
    r.lowest = 1;
    for (int d = 1; d <= polys[i].degree(); ++d) r.coeffs.push_back(polys[i].coeff(d).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CoefficientRow> rows_of(const std::vector<RatPolynomial>& boros_moll) {
  std::vector<CoefficientRow> rows;
  for (std::size_t i = 0; i < boros_moll.size(); ++i) {
    CoefficientRow r;
    r.n = static_cast<int>(i);
    r.lowest = 0;
    for (int d = 0; d <= boros_moll[i].degree(); ++d) {
      r.coeffs.push_back(lcv::to_string(boros_moll[i].coeff(d)));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void render_rows(FamilyId family, const std::vector<CoefficientRow>& rows, Format format,
                 std::ostream& out) {
  switch (format) {
    case Format::Text:
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
          out << (i ? " " : "") << r.coeffs[i];
        }
        out << '\n';
      }
      break;
    case Format::Csv:
      out << "family,n,degree,coefficient\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
          out << family_name(family) << ',' << r.n << ',' << r.lowest + static_cast<int>(i) << ','
              << r.coeffs[i] << '\n';
        }
      }
      break;
    case Format::Json: {
      ordered_json j = header("compute", family);
      j["rows"] = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["lowest_degree"] = r.lowest;
        row["coeffs"] = r.coeffs;
        j["rows"].push_back(std::move(row));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
}

bool Report::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const VerdictEntry& e) { return e.verdict.holds(); });
}

ordered_json to_json(const Report& report, bool with_timings) {
  ordered_json j = header("verify", report.family);
  j["suite"] = report.suite;
  j["exploratory"] = report.exploratory;
  j["window"] = {{"n_min", report.n_min}, {"n_max", report.n_max}};
  j["depth"] = report.depth ? ordered_json(*report.depth) : ordered_json(nullptr);
  j["all_hold"] = report.all_hold();
  j["verdicts"] = ordered_json::array();
  for (const auto& e : report.verdicts) {
    ordered_json v;
    if (e.n) {
      v["n"] = *e.n;
    } else {
      v["window"] = {{"lo", e.window_lo.value_or(0)}, {"hi", e.window_hi.value_or(0)}};
    }
    v["holds"] = e.verdict.holds();
    v["depth_reached"] = e.verdict.depth_reached();
    v["witness"] = e.verdict.witness() ? witness_json(*e.verdict.witness()) : ordered_json(nullptr);
    if (with_timings) v["seconds"] = e.seconds;
    j["verdicts"].push_back(std::move(v));
  }
  return j;
}

void render_report(const Report& report, Format format, bool with_timings, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(report, with_timings).dump(2) << '\n';
      return;
    case Format::Csv:
      out << "family,suite,target,holds,depth_reached,witness_kind,witness_depth,witness_index,"
             "witness_partner,witness_degree,witness_value";
      if (with_timings) out << ",seconds";
      out << '\n';
      for (const auto& e : report.verdicts) {
        out << family_name(report.family) << ',' << report.suite << ',' << target_label(e) << ','
            << (e.verdict.holds() ? "true" : "false") << ',' << e.verdict.depth_reached();
        if (const auto& w = e.verdict.witness()) {
          out << ',' << to_string(w->kind) << ',' << w->depth << ',' << csv_opt(w->index) << ','
              << csv_opt(w->partner) << ',' << csv_opt(w->degree) << ',' << lcv::to_string(w->value);
        } else {
          out << ",,,,,,";
        }
        if (with_timings) out << ',' << e.seconds;
        out << '\n';
      }
      return;
    case Format::Text: {
      out << "verify family=" << family_name(report.family) << " suite=" << report.suite
          << " window=" << report.n_min << ".." << report.n_max;
      if (report.depth) out << " depth=" << *report.depth;
      if (report.exploratory) out << " (exploratory)";
      out << '\n';
      std::size_t failures = 0;
      for (const auto& e : report.verdicts) {
        out << target_label(e) << ' ' << (e.verdict.holds() ? "holds" : "FAILS")
            << " depth_reached=" << e.verdict.depth_reached();
        if (const auto& w = e.verdict.witness()) {
          out << " witness: " << describe(*w);
          ++failures;
        }
        if (with_timings) out << " seconds=" << e.seconds;
        out << '\n';
      }
      if (failures == 0) {
        out << "result: all " << report.verdicts.size() << " verdicts hold\n";
      } else {
        out << "result: " << failures << " of " << report.verdicts.size() << " verdicts fail\n";
      }
      return;
    }
  }
}

ordered_json to_json(const golden::DiffResult& diff) {
  ordered_json j = header("golden-diff", diff.family);
  j["rows_checked"] = diff.rows_checked;
  j["rows_matching"] = diff.rows_matching;
  j["mismatches"] = ordered_json::array();
  for (std::size_t i = 0; i < diff.mismatches.size(); ++i) {
    const auto& m = diff.mismatches[i];
    const auto& c = diff.misprints[i];
    j["mismatches"].push_back({{"n", m.n},
                               {"degree", m.degree},
                               {"expected", m.expected},
                               {"got", m.got},
                               {"misprint_certified", c.certified},
                               {"printed_row_sum", c.printed_sum.get_str()},
                               {"identity_row_sum", c.expected_sum.get_str()},
                               {"identity_implied_value", c.implied_value.get_str()}});
  }
  return j;
}

void render_golden_diff(const golden::DiffResult& diff, bool errata, Format format,
                        std::ostream& out) {
  switch (format) {
    case Format::Json: {
      ordered_json j = to_json(diff);
      j["errata_mode"] = errata;
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "family,n,degree,expected,got,misprint_certified\n";
      for (std::size_t i = 0; i < diff.mismatches.size(); ++i) {
        const auto& m = diff.mismatches[i];
        out << family_name(diff.family) << ',' << m.n << ',' << m.degree << ',' << m.expected << ','
            << m.got << ',' << (diff.misprints[i].certified ? "true" : "false") << '\n';
      }
      return;
    case Format::Text:
      out << "golden-diff family=" << family_name(diff.family) << " rows=" << diff.rows_checked
          << (errata ? " (errata mode)" : "") << '\n';
      for (std::size_t i = 0; i < diff.mismatches.size(); ++i) {
        const auto& m = diff.mismatches[i];
        const auto& c = diff.misprints[i];
        out << "mismatch family=" << family_name(diff.family) << " n=" << m.n
            << " degree=" << m.degree << " expected=" << m.expected << " got=" << m.got;
        if (c.certified) {
          out << " [misprint: printed row sums to " << c.printed_sum.get_str() << ", identity needs "
              << c.expected_sum.get_str() << ", implying " << c.implied_value.get_str() << "]";
        }
        out << '\n';
      }
      out << "result: " << diff.rows_matching << '/' << diff.rows_checked << " rows match\n";
      return;
  }
}

void render_oracle_check(FamilyId family, const std::vector<OracleComparison>& rows,
                         Format format, std::ostream& out) {
  auto histogram_text = [](const Histogram& h) {
    std::string s;
    for (const auto& [k, count] : h) {
      if (!s.empty()) s += ' ';
      s += std::to_string(k) + ":" + count.get_str();
    }
    return s;
  };
  switch (format) {
    case Format::Json: {
      ordered_json j = header("oracle-check", family);
      j["rows"] = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json hist = ordered_json::object();
        for (const auto& [k, count] : r.oracle) hist[std::to_string(k)] = count.get_str();
        j["rows"].push_back(
            {{"n", r.n}, {"matches", r.matches}, {"oracle", hist}, {"polynomial", r.polynomial}});
      }
      j["all_match"] = std::all_of(rows.begin(), rows.end(),
                                   [](const OracleComparison& r) { return r.matches; });
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "family,n,k,oracle,polynomial\n";
      for (const auto& r : rows) {
        for (int k = 1; k <= r.n; ++k) {
          auto it = r.oracle.find(k);
          out << family_name(family) << ',' << r.n << ',' << k << ','
              << (it == r.oracle.end() ? "0" : it->second.get_str()) << ','
              << (k <= static_cast<int>(r.polynomial.size()) ? r.polynomial[k - 1] : "0") << '\n';
        }
      }
      return;
    case Format::Text: {
      std::size_t matched = 0;
      for (const auto& r : rows) {
        out << "n=" << r.n << ' ' << (r.matches ? "match" : "MISMATCH") << ' '
            << histogram_text(r.oracle);
        if (!r.matches) {
          out << " polynomial:";
          for (const auto& c : r.polynomial) out << ' ' << c;
        }
        out << '\n';
        matched += r.matches ? 1 : 0;
      }
      out << "result: " << matched << '/' << rows.size() << " rows match\n";
      return;
    }
  }
}

}  // namespace lcv
