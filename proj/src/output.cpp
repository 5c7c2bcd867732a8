#include "simulprime/output.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace simulprime {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dec(const Int& x) { return x.get_str(); }

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string join_targets(const std::vector<Natural>& targets) {
  std::string out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i != 0) {
      out += ';';
    }
    out += dec(targets[i]);
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

// column width in code points, so the aligned tables survive ≤ and ≥
std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) {
      ++width;
    }
  }
  return width;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    widths[i] = display_width(header[i]);
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  }
  std::string out;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 != row.size()) {
        out.append(widths[i] - display_width(row[i]) + 2, ' ');
      }
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) {
    emit(row);
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") {
    return OutputFormat::table;
  }
  if (name == "json") {
    return OutputFormat::json;
  }
  if (name == "csv") {
    return OutputFormat::csv;
  }
  throw DomainError("unknown output format '" + name +
                    "' (expected table, json, or csv)");
}

OutputRecord record_for(const Form& form, const Natural& base,
                        const FormVerdict& verdict) {
  OutputRecord rec;
  rec.base = base;
  for (const Int& t : form.pattern.targets_at(base)) {
    rec.targets.push_back(Natural(t));
  }
  rec.form_id = form.id;
  rec.verdict = verdict.holds;
  rec.residue = verdict.residue;
  rec.reason = verdict.reason;
  return rec;
}

std::string render_records(const std::vector<OutputRecord>& records,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    std::string out;
    for (const OutputRecord& rec : records) {
      ordered_json j;
      j["p"] = dec(rec.base);
      ordered_json targets = ordered_json::array();
      for (const Natural& t : rec.targets) {
        targets.push_back(dec(t));
      }
      j["targets"] = std::move(targets);
      j["form"] = rec.form_id;
      j["verdict"] = rec.verdict;
      if (rec.residue) {
        j["residue"] = dec(rec.residue->value());
        j["modulus"] = dec(rec.residue->modulus());
      }
      j["reason"] = rec.reason;
      if (rec.witness) {
        j["witness"] = dec(*rec.witness);
      }
      out += j.dump();
      out += '\n';
    }
    return out;
  }

  if (format == OutputFormat::csv) {
    std::string out =
        csv_row({"p", "targets", "form", "verdict", "residue", "modulus",
                 "reason"});
    for (const OutputRecord& rec : records) {
      out += csv_row({dec(rec.base), join_targets(rec.targets), rec.form_id,
                      rec.verdict ? "true" : "false",
                      rec.residue ? dec(rec.residue->value()) : "",
                      rec.residue ? dec(rec.residue->modulus()) : "",
                      rec.reason});
    }
    return out;
  }

  bool any_witness = false;
  for (const OutputRecord& rec : records) {
    any_witness = any_witness || rec.witness.has_value();
  }
  std::vector<std::string> header = {"p",       "targets", "form",
                                     "verdict", "residue", "modulus",
                                     "reason"};
  if (any_witness) {
    header.push_back("witness");
  }
  std::vector<std::vector<std::string>> rows;
  for (const OutputRecord& rec : records) {
    std::vector<std::string> row = {
        dec(rec.base),
        join_targets(rec.targets),
        rec.form_id,
        rec.verdict ? "true" : "false",
        rec.residue ? dec(rec.residue->value()) : "-",
        rec.residue ? dec(rec.residue->modulus()) : "-",
        rec.reason};
    if (any_witness) {
      row.push_back(rec.witness ? dec(*rec.witness) : "-");
    }
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string render_report(const VerificationReport& report,
                          OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["form"] = report.form_id;
    j["pattern"] = report.pattern.to_string();
    j["lo"] = dec(report.lo);
    j["hi"] = dec(report.hi);
    j["jobs"] = report.jobs;
    j["checked"] = report.checked;
    ordered_json mismatches = ordered_json::array();
    for (const Mismatch& m : report.mismatches) {
      ordered_json row;
      row["p"] = dec(m.base);
      row["form"] = m.form_verdict;
      row["oracle"] = m.oracle_verdict;
      mismatches.push_back(std::move(row));
    }
    j["mismatches"] = std::move(mismatches);
    j["ok"] = report.ok();
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump() + "\n";
  }

  if (format == OutputFormat::csv) {
    std::string out = csv_row({"p", "form_verdict", "oracle_verdict"});
    for (const Mismatch& m : report.mismatches) {
      out += csv_row({dec(m.base), m.form_verdict ? "true" : "false",
                      m.oracle_verdict ? "true" : "false"});
    }
    return out;
  }

  std::string out;
  out += "form        " + report.form_id + "\n";
  out += "pattern     " + report.pattern.to_string() + "\n";
  out += "range       " + dec(report.lo) + ".." + dec(report.hi) + "\n";
  out += "jobs        " + std::to_string(report.jobs) + "\n";
  out += "checked     " + std::to_string(report.checked) + "\n";
  out += "mismatches  " + std::to_string(report.mismatches.size()) + "\n";
  out += "elapsed_ms  " + fixed3(report.elapsed_ms) + "\n";
  for (const Mismatch& m : report.mismatches) {
    out += "mismatch p=" + dec(m.base) +
           " form=" + (m.form_verdict ? "true" : "false") +
           " oracle=" + (m.oracle_verdict ? "true" : "false") + "\n";
  }
  return out;
}

std::string render_bench(const std::vector<BenchRow>& rows,
                         OutputFormat format) {
  // near-zero sieve times on tiny ranges would blow the ratio up to inf,
  // which JSON cannot hold; clamp the denominator instead
  const auto ratio_of = [](const BenchRow& row) {
    const double denom = row.sieve_ms > 1e-6 ? row.sieve_ms : 1e-6;
    return row.form_ms / denom;
  };

  if (format == OutputFormat::json) {
    std::string out;
    for (const BenchRow& row : rows) {
      ordered_json j;
      j["form"] = row.form_id;
      j["lo"] = dec(row.lo);
      j["hi"] = dec(row.hi);
      j["candidates"] = row.candidates;
      j["hits"] = row.hits;
      j["form_ms"] = row.form_ms;
      j["sieve_ms"] = row.sieve_ms;
      j["ratio"] = ratio_of(row);
      out += j.dump();
      out += '\n';
    }
    return out;
  }

  if (format == OutputFormat::csv) {
    std::string out = csv_row({"form", "lo", "hi", "candidates", "hits",
                               "form_ms", "sieve_ms", "ratio"});
    for (const BenchRow& row : rows) {
      out += csv_row({row.form_id, dec(row.lo), dec(row.hi),
                      std::to_string(row.candidates),
                      std::to_string(row.hits), fixed3(row.form_ms),
                      fixed3(row.sieve_ms), fixed3(ratio_of(row))});
    }
    return out;
  }

  std::vector<std::vector<std::string>> body;
  for (const BenchRow& row : rows) {
    body.push_back({row.form_id, dec(row.lo) + ".." + dec(row.hi),
                    std::to_string(row.candidates), std::to_string(row.hits),
                    fixed3(row.form_ms), fixed3(row.sieve_ms),
                    fixed3(ratio_of(row))});
  }
  return render_table({"form", "range", "candidates", "hits", "form_ms",
                       "sieve_ms", "ratio"},
                      body);
}

std::string render_families(const std::vector<FormFamily>& families,
                            OutputFormat format) {
  if (format == OutputFormat::json) {
    std::string out;
    for (const FormFamily& fam : families) {
      ordered_json j;
      j["id"] = fam.id;
      j["kind"] = fam.kind;
      j["pattern"] = fam.pattern;
      j["domain"] = fam.domain;
      j["source"] = fam.source;
      out += j.dump();
      out += '\n';
    }
    return out;
  }

  if (format == OutputFormat::csv) {
    std::string out = csv_row({"id", "kind", "pattern", "domain", "source"});
    for (const FormFamily& fam : families) {
      out += csv_row({fam.id, fam.kind, fam.pattern, fam.domain, fam.source});
    }
    return out;
  }

  std::vector<std::vector<std::string>> body;
  for (const FormFamily& fam : families) {
    body.push_back({fam.id, fam.kind, fam.pattern, fam.domain, fam.source});
  }
  return render_table({"id", "kind", "pattern", "domain", "source"}, body);
}

}  // namespace simulprime
