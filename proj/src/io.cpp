#include "fuscat/io.hpp"

#include <cstdio>
#include <cstdlib>

namespace fuscat {

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string label_str(const CategorySpec& spec, const Label& label) {
  if (spec.family == Family::SoLevel1) {
    static const char* names[4] = {"0", "s-", "s+", "v"};
    return names[grading_of(spec, label)];
  }
  return label.str(spec.rank);
}

json spec_json(const CategorySpec& spec) {
  json j;
  j["family"] = family_name(spec.family);
  j["rank"] = spec.rank;
  j["ell"] = spec.ell;
  j["a"] = spec.a;
  return j;
}

json complex_json(const std::complex<double>& z) {
  return json::array({round12(z.real()), round12(z.imag())});
}

json labels_json(const CategorySpec& spec) {
  const std::vector<Label> labels = label_set(spec);
  json arr = json::array();
  for (const Label& l : labels) arr.push_back(label_str(spec, l));
  json j;
  j["spec"] = spec_json(spec);
  j["count"] = labels.size();
  j["labels"] = arr;
  return j;
}

std::string labels_csv(const CategorySpec& spec) {
  const std::vector<Label> labels = label_set(spec);
  std::string out = "index,label\n";
  for (size_t i = 0; i < labels.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += label_str(spec, labels[i]);
    out += '\n';
  }
  return out;
}

json modular_json(const ModularData& md) {
  json j;
  j["spec"] = spec_json(md.spec);

  json labels = json::array();
  for (const Label& l : md.labels) labels.push_back(label_str(md.spec, l));
  j["labels"] = labels;

  json h = json::array();
  for (const Rational& r : md.h) h.push_back(r.str());
  j["h"] = h;

  json twists = json::array();
  for (int i = 0; i < md.twists.size(); ++i) twists.push_back(complex_json(md.twists(i)));
  j["twists"] = twists;

  json dims = json::array();
  for (int i = 0; i < md.dims.size(); ++i) dims.push_back(round12(md.dims(i)));
  j["dims"] = dims;

  j["grading"] = md.grading;
  j["block"] = md.block;

  json rows = json::array();
  for (int r = 0; r < md.smatrix.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < md.smatrix.cols(); ++c) row.push_back(complex_json(md.smatrix(r, c)));
    rows.push_back(row);
  }
  j["smatrix"] = rows;

  if (md.spec.family == Family::SoLevel1) j["spinor_convention"] = "s+ carries the even-box sector";
  return j;
}

json fusion_json(const FusionTable& f) {
  json j;
  j["spec"] = spec_json(f.spec);

  json labels = json::array();
  for (const Label& l : f.labels) labels.push_back(label_str(f.spec, l));
  j["labels"] = labels;

  json triples = json::array();
  const int B = static_cast<int>(f.labels.size());
  for (int a = 0; a < B; ++a)
    for (int b = 0; b < B; ++b)
      for (int c = 0; c < B; ++c) {
        const int n = f.coeff(a, b, c);
        if (n == 0) continue;
        json t;
        t["a"] = label_str(f.spec, f.labels[a]);
        t["b"] = label_str(f.spec, f.labels[b]);
        t["c"] = label_str(f.spec, f.labels[c]);
        t["coeff"] = n;
        triples.push_back(t);
      }
  j["nonzero"] = triples;
  return j;
}

std::string fusion_csv(const FusionTable& f) {
  std::string out = "a,b,c,coeff\n";
  const int B = static_cast<int>(f.labels.size());
  for (int a = 0; a < B; ++a)
    for (int b = 0; b < B; ++b)
      for (int c = 0; c < B; ++c) {
        const int n = f.coeff(a, b, c);
        if (n == 0) continue;
        out += label_str(f.spec, f.labels[a]);
        out += ',';
        out += label_str(f.spec, f.labels[b]);
        out += ',';
        out += label_str(f.spec, f.labels[c]);
        out += ',';
        out += std::to_string(n);
        out += '\n';
      }
  return out;
}

json branching_json(const BranchingTable& bt) {
  json j;
  j["n"] = bt.n;
  j["k"] = bt.k;
  json sectors;
  for (int s = 0; s < 4; ++s) {
    json rows = json::array();
    for (const auto& [lam, partner] : bt.sectors[static_cast<size_t>(s)])
      rows.push_back(json::array({lam.str(), partner.str()}));
    sectors[sector_name(static_cast<Sector>(s))] = rows;
  }
  j["sectors"] = sectors;
  return j;
}

std::string branching_csv(const BranchingTable& bt, const std::string& only) {
  std::string out = "sector,lambda,partner\n";
  for (int s = 0; s < 4; ++s) {
    const std::string name = sector_name(static_cast<Sector>(s));
    if (!only.empty() && name != only) continue;
    for (const auto& [lam, partner] : bt.sectors[static_cast<size_t>(s)]) {
      out += name;
      out += ',';
      out += lam.str();
      out += ',';
      out += partner.str();
      out += '\n';
    }
  }
  return out;
}

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["gap"] = round12(c.gap);
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

json report_json(const DualityReport& rep, const std::string& target) {
  json j;
  j["target"] = target;
  j["left"] = spec_json(rep.left);
  j["right"] = spec_json(rep.right);
  j["checks"] = checks_json(rep.checks);
  json matching = json::array();
  for (const auto& [a, b] : rep.matching) matching.push_back(json::array({a, b}));
  j["matching"] = matching;
  j["pass"] = rep.pass();
  return j;
}

json report_json(const BranchingReport& rep, const std::string& target) {
  json j;
  j["target"] = target;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["checks"] = checks_json(rep.checks);
  j["pass"] = rep.pass();
  return j;
}

}  // namespace fuscat
