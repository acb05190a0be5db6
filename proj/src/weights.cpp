#include "osa/weights.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace osa {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  if (body.rfind("gamma=", 0) == 0) body = body.substr(6);
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

int Partition::size() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

bool HArgLess::operator()(const HArg& a, const HArg& b) const {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (auto c = seq_compare(a.seq, b.seq); c != 0) return c < 0;
  if (a.l1 != b.l1) return a.l1 < b.l1;
  return a.l2 < b.l2;
}

std::string render(const HArg& a) {
  std::string s = render_seq(a.seq);
  switch (a.kind) {
    case Kind::F: return "h_I(" + std::to_string(a.l1) + ";" + s + ";" + std::to_string(a.l2) + ")";
    case Kind::L: return "h_II(" + std::to_string(a.l1) + ";" + s + ")";
    case Kind::R: return "h_III(" + s + ";" + std::to_string(a.l2) + ")";
    case Kind::S: return "h_IV(" + s + ")";
  }
  return "?";
}

Generator diagonal_generator(const HArg& a) {
  switch (a.kind) {
    case Kind::F: return Generator::f(a.l1, a.l1, a.l2, a.l2, a.seq, a.seq);
    case Kind::L: return Generator::l(a.l1, a.l1, a.seq, a.seq);
    case Kind::R: return Generator::r(a.l2, a.l2, a.seq, a.seq);
    case Kind::S: return Generator::s(a.seq, a.seq);
  }
  return Generator::s(a.seq, a.seq);
}

std::optional<HArg> diagonal_arg(const Generator& g) {
  if (g.upper != g.lower) return std::nullopt;
  switch (g.kind) {
    case Kind::F:
      if (g.fl[0] != g.fl[1] || g.fl[2] != g.fl[3]) return std::nullopt;
      return HArg::I(g.fl[0], g.upper, g.fl[2]);
    case Kind::L:
      if (g.fl[0] != g.fl[1]) return std::nullopt;
      return HArg::II(g.fl[0], g.upper);
    case Kind::R:
      if (g.fl[0] != g.fl[1]) return std::nullopt;
      return HArg::III(g.upper, g.fl[0]);
    case Kind::S:
      return HArg::IV(g.upper);
  }
  return std::nullopt;
}

bool is_free_arg(const HArg& a) {
  const Seq& s = a.seq;
  switch (a.kind) {
    case Kind::F: return true;
    case Kind::L: return s.empty() || s.back() != 1;
    case Kind::R: return s.empty() ? a.l2 != 1 : s.front() != 1;
    case Kind::S: return s.empty() || (s.front() != 1 && s.back() != 1);
  }
  return false;
}

void Weight::set(const HArg& a, const Q& value) {
  Q v = value;
  v.canonicalize();
  alpha.canonicalize();
  if (a.kind == Kind::F) {
    Q dev = v - alpha;
    if (dev == 0)
      hI.erase(a);
    else
      hI[a] = dev;
    return;
  }
  if (v == 0)
    free.erase(a);
  else
    free[a] = v;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Seq seq_at(long index, int lambda) {
  int len = 0;
  while (index >= ipow(lambda, len)) {
    index -= ipow(lambda, len);
    ++len;
  }
  Seq s(static_cast<std::size_t>(len), 1);
  for (int i = len - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<int>(index % lambda) + 1;
    index /= lambda;
  }
  return s;
}

long seq_index(const Seq& s, int lambda) {
  long base = 0;
  for (std::size_t l = 0; l < s.size(); ++l) base += ipow(lambda, static_cast<int>(l));
  long rank = 0;
  for (int v : s) rank = rank * lambda + (v - 1);
  return base + rank;
}

long occurrences(const Seq& hay, const Seq& needle) {
  if (needle.size() > hay.size()) return 0;
  long n = 0;
  for (std::size_t p = 0; p + needle.size() <= hay.size(); ++p)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(p))) ++n;
  return n;
}

Q af_value(const Weight& w, const HArg& a) {
  if (a.kind == Kind::F) {
    Q alpha = w.alpha;
    alpha.canonicalize();
    auto it = w.hI.find(a);
    return alpha + (it == w.hI.end() ? Q(0) : it->second);
  }
  if (w.alpha != 0)
    throw DivergentSumError("weight sum for " + render(a) + " diverges: constant tail alpha = " +
                            render_rational(w.alpha));
  Q total = 0;
  for (const auto& [arg, v] : w.hI) {
    switch (a.kind) {
      case Kind::L:
        if (arg.l1 == a.l1 && starts_with(arg.seq, a.seq)) total += v;
        break;
      case Kind::R:
        if (arg.l2 == a.l2 && ends_with(arg.seq, a.seq)) total += v;
        break;
      case Kind::S:
        total += v * Q(occurrences(arg.seq, a.seq));
        break;
      case Kind::F:
        break;
    }
  }
  return total;
}

// Single-step peeling identities evaluated at the vacuum.
Q free_value(const Weight& w, const HArg& a) {
  const Params& p = w.params;
  if (a.kind == Kind::F) return af_value(w, a);
  if (is_free_arg(a)) {
    auto it = w.free.find(a);
    return it == w.free.end() ? Q(0) : it->second;
  }
  const Seq& s = a.seq;
  Q total = 0;
  switch (a.kind) {
    case Kind::L: {
      Seq head = slice(s, 0, s.size() - 1);
      total += free_value(w, HArg::II(a.l1, head));
      for (int j = 2; j <= p.lambda; ++j) total -= free_value(w, HArg::II(a.l1, concat(head, {j})));
      for (int mu = 1; mu <= p.lambda_f; ++mu) total -= free_value(w, HArg::I(a.l1, head, mu));
      break;
    }
    case Kind::R: {
      if (s.empty()) {
        for (int mu = 1; mu <= p.lambda_f; ++mu) total += free_value(w, HArg::II(mu, {}));
        for (int mu = 2; mu <= p.lambda_f; ++mu) total -= free_value(w, HArg::III({}, mu));
        break;
      }
      Seq tail = slice(s, 1, s.size());
      total += free_value(w, HArg::III(tail, a.l2));
      for (int i = 2; i <= p.lambda; ++i) total -= free_value(w, HArg::III(concat({i}, tail), a.l2));
      for (int mu = 1; mu <= p.lambda_f; ++mu) total -= free_value(w, HArg::I(mu, tail, a.l2));
      break;
    }
    case Kind::S: {
      if (s.front() == 1) {
        Seq tail = slice(s, 1, s.size());
        total += free_value(w, HArg::IV(tail));
        for (int i = 2; i <= p.lambda; ++i) total -= free_value(w, HArg::IV(concat({i}, tail)));
        for (int mu = 1; mu <= p.lambda_f; ++mu) total -= free_value(w, HArg::II(mu, tail));
      } else {
        Seq head = slice(s, 0, s.size() - 1);
        total += free_value(w, HArg::IV(head));
        for (int j = 2; j <= p.lambda; ++j) total -= free_value(w, HArg::IV(concat(head, {j})));
        for (int mu = 1; mu <= p.lambda_f; ++mu) total -= free_value(w, HArg::III(head, mu));
      }
      break;
    }
    case Kind::F:
      break;
  }
  return total;
}

void check_arg(const HArg& a, const Params& p) {
  auto flavor_ok = [&](int v) { return v >= 1 && v <= p.lambda_f; };
  bool ok = true;
  switch (a.kind) {
    case Kind::F: ok = flavor_ok(a.l1) && flavor_ok(a.l2); break;
    case Kind::L: ok = flavor_ok(a.l1); break;
    case Kind::R: ok = flavor_ok(a.l2); break;
    case Kind::S: break;
  }
  if (!ok) throw RangeError("flavor outside [1, Lambda_F=" + std::to_string(p.lambda_f) + "] in " + render(a));
  for (int v : a.seq)
    if (v < 1 || v > p.lambda)
      throw RangeError("color outside [1, Lambda=" + std::to_string(p.lambda) + "] in " + render(a));
}

}  // namespace

HArg arg_enumerate(long k, const Params& p) {
  if (k < 1) throw std::invalid_argument("argument index must be positive");
  const long f2 = static_cast<long>(p.lambda_f) * p.lambda_f;
  long i = k - 1;
  long s = i / f2;
  long rem = i % f2;
  int l1 = static_cast<int>(rem / p.lambda_f) + 1;
  int l2 = static_cast<int>(rem % p.lambda_f) + 1;
  return HArg::I(l1, seq_at(s, p.lambda), l2);
}

long arg_index(const HArg& a, const Params& p) {
  const long f2 = static_cast<long>(p.lambda_f) * p.lambda_f;
  return seq_index(a.seq, p.lambda) * f2 + static_cast<long>(a.l1 - 1) * p.lambda_f + (a.l2 - 1) + 1;
}

Weight weight_from_partition(const Partition& gamma, const Params& p) {
  Weight w;
  w.params = p;
  w.mode = WeightMode::AF;
  long k = 1;
  for (int part : gamma.parts) w.set(arg_enumerate(k++, p), part);
  return w;
}

Q h_eval(const Weight& w, const HArg& a) {
  check_arg(a, w.params);
  if (w.mode == WeightMode::AF) return af_value(w, a);
  return free_value(w, a);
}

int support_length(const Weight& w) {
  int n = -1;
  for (const auto& kv : w.hI) n = std::max(n, static_cast<int>(kv.first.seq.size()));
  return n;
}

std::vector<HArg> diagonal_args(Kind kind, const Params& p, int max_len) {
  std::vector<HArg> out;
  for (const Seq& s : sequences_up_to(p.lambda, max_len)) {
    switch (kind) {
      case Kind::F:
        for (int a = 1; a <= p.lambda_f; ++a)
          for (int b = 1; b <= p.lambda_f; ++b) out.push_back(HArg::I(a, s, b));
        break;
      case Kind::L:
        for (int a = 1; a <= p.lambda_f; ++a) out.push_back(HArg::II(a, s));
        break;
      case Kind::R:
        for (int b = 1; b <= p.lambda_f; ++b) out.push_back(HArg::III(s, b));
        break;
      case Kind::S:
        out.push_back(HArg::IV(s));
        break;
    }
  }
  return out;
}

Weight free_seeded_from(const Weight& w, int max_len) {
  Weight out;
  out.params = w.params;
  out.mode = WeightMode::Free;
  out.alpha = w.alpha;
  out.hI = w.hI;
  for (Kind k : {Kind::L, Kind::R, Kind::S})
    for (const HArg& a : diagonal_args(k, w.params, max_len))
      if (is_free_arg(a)) out.set(a, h_eval(w, a));
  return out;
}

bool is_approximately_finite(const Weight& w) {
  if (w.alpha != 0) return false;
  long last = 0;
  for (const auto& kv : w.hI) last = std::max(last, arg_index(kv.first, w.params));
  for (long k = 1; k <= last; ++k) {
    Q diff = h_eval(w, arg_enumerate(k, w.params)) - h_eval(w, arg_enumerate(k + 1, w.params));
    if (diff < 0 || diff.get_den() != 1) return false;
  }
  if (w.mode == WeightMode::Free) {
    Weight af = w;
    af.mode = WeightMode::AF;
    int len = std::max(support_length(w), 0);
    for (const auto& kv : w.free) len = std::max(len, static_cast<int>(kv.first.seq.size()));
    for (Kind k : {Kind::L, Kind::R, Kind::S})
      for (const HArg& a : diagonal_args(k, w.params, len + 1))
        if (h_eval(w, a) != h_eval(af, a)) return false;
  }
  return true;
}

LemmaA lemma_a_params(const Weight& w) {
  LemmaA out;
  out.alpha = w.alpha;
  out.n = support_length(w) + 1;
  return out;
}

WeightSplit split_weight(const Weight& w) {
  WeightSplit out;
  out.alpha = w.alpha;
  out.af.params = w.params;
  out.af.mode = WeightMode::AF;
  out.af.hI = w.hI;
  out.ti.params = w.params;
  out.ti.mode = WeightMode::Free;
  out.ti.alpha = w.alpha;
  if (w.mode == WeightMode::AF) {
    if (w.alpha != 0) throw DivergentSumError("approximately finite weight with nonzero tail");
    return out;
  }
  int len = std::max(support_length(w), 0);
  for (const auto& kv : w.free) len = std::max(len, static_cast<int>(kv.first.seq.size()));
  for (Kind k : {Kind::L, Kind::R, Kind::S})
    for (const HArg& a : diagonal_args(k, w.params, len + 1))
      if (is_free_arg(a)) out.ti.set(a, h_eval(w, a) - h_eval(out.af, a));
  return out;
}

std::string weight_to_json(const Weight& w) {
  using nlohmann::json;
  json doc;
  doc["lambda"] = w.params.lambda;
  doc["lambda_f"] = w.params.lambda_f;
  doc["alpha"] = render_rational(w.alpha);
  doc["mode"] = w.mode == WeightMode::AF ? "AF" : "Free";
  json entries = json::array();
  auto emit = [&](const HArg& a, const Q& v) {
    json e;
    e["kind"] = kind_name(a.kind);
    switch (a.kind) {
      case Kind::F: e["flavors"] = {a.l1, a.l2}; break;
      case Kind::L: e["flavors"] = {a.l1}; break;
      case Kind::R: e["flavors"] = {a.l2}; break;
      case Kind::S: e["flavors"] = json::array(); break;
    }
    e["sequence"] = a.seq;
    e["value"] = render_rational(v);
    entries.push_back(e);
  };
  for (const auto& [a, dev] : w.hI) emit(a, w.alpha + dev);
  for (const auto& [a, v] : w.free) emit(a, v);
  doc["entries"] = entries;
  return doc.dump(2);
}

namespace {

Q parse_rational(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Weight weight_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("weight file: ") + e.what());
  }
  try {
    Weight w;
    w.params = Params(doc.at("lambda").get<int>(), doc.at("lambda_f").get<int>());
    w.alpha = parse_rational(doc.value("alpha", std::string("0")));
    std::string mode = doc.value("mode", std::string("AF"));
    if (mode == "AF")
      w.mode = WeightMode::AF;
    else if (mode == "Free")
      w.mode = WeightMode::Free;
    else
      throw std::invalid_argument("weight file: unknown mode '" + mode + "'");
    for (const auto& e : doc.value("entries", json::array())) {
      std::string kind = e.at("kind").get<std::string>();
      std::vector<int> fl = e.value("flavors", std::vector<int>{});
      Seq seq = e.value("sequence", Seq{});
      Q v = parse_rational(e.at("value").get<std::string>());
      HArg a;
      auto need = [&](std::size_t n) {
        if (fl.size() != n) throw std::invalid_argument("weight file: kind " + kind + " needs " + std::to_string(n) + " flavors");
      };
      if (kind == "I") {
        need(2);
        a = HArg::I(fl[0], seq, fl[1]);
      } else if (kind == "II") {
        need(1);
        a = HArg::II(fl[0], seq);
      } else if (kind == "III") {
        need(1);
        a = HArg::III(seq, fl[0]);
      } else if (kind == "IV") {
        need(0);
        a = HArg::IV(seq);
      } else {
        throw std::invalid_argument("weight file: unknown kind '" + kind + "'");
      }
      check_arg(a, w.params);
      if (a.kind != Kind::F && w.mode == WeightMode::AF)
        throw std::invalid_argument("weight file: AF weights carry only kind I entries");
      if (a.kind != Kind::F && !is_free_arg(a))
        throw std::invalid_argument("weight file: " + render(a) + " is determined by recursion, not free");
      w.set(a, v);
    }
    return w;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("weight file: ") + e.what());
  }
}

}  // namespace osa
