#include "stateprep/circuit_text.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stateprep {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* fn_name(ClassicalFn fn) {
  switch (fn) {
    case ClassicalFn::GhzCorrect:
      return "GHZ_CORRECT";
    case ClassicalFn::FanoutXCorrect:
      return "FANOUT_X_CORRECT";
    case ClassicalFn::Parity:
      return "PARITY";
  }
  return "?";
}

ClassicalFn fn_from_name(const std::string& name) {
  if (name == "GHZ_CORRECT") return ClassicalFn::GhzCorrect;
  if (name == "FANOUT_X_CORRECT") return ClassicalFn::FanoutXCorrect;
  if (name == "PARITY") return ClassicalFn::Parity;
  throw std::invalid_argument("unknown classical function: " + name);
}

void append_1q(std::ostringstream& os, const Apply1Q& g) {
  switch (g.gate) {
    case Gate1Q::H:
      os << "H " << g.qubit;
      return;
    case Gate1Q::X:
      os << "X " << g.qubit;
      return;
    case Gate1Q::Z:
      os << "Z " << g.qubit;
      return;
    case Gate1Q::RY:
      os << "RY " << g.qubit << ' ' << fmt_double(g.angle);
      return;
    case Gate1Q::RZ:
      os << "RZ " << g.qubit << ' ' << fmt_double(g.angle);
      return;
    case Gate1Q::Generic:
      os << "G1 " << g.qubit;
      for (const auto& entry : {g.matrix.m00, g.matrix.m01, g.matrix.m10, g.matrix.m11}) {
        os << ' ' << fmt_double(entry.real()) << ' ' << fmt_double(entry.imag());
      }
      return;
  }
  throw std::invalid_argument("unknown gate");
}

struct LineParser {
  std::istringstream in;
  int line_no;

  LineParser(const std::string& line, int number) : in(line), line_no(number) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
  }

  std::string word() {
    std::string w;
    if (!(in >> w)) fail("unexpected end of line");
    return w;
  }

  bool try_word(std::string& w) { return static_cast<bool>(in >> w); }

  int integer() {
    int v = 0;
    if (!(in >> v)) fail("expected an integer");
    return v;
  }

  double real() {
    double v = 0.0;
    if (!(in >> v)) fail("expected a number");
    return v;
  }

  int clbit() {
    std::string w = word();
    if (w.size() < 2 || w[0] != 'c') fail("expected a classical bit like c3, got " + w);
    try {
      return std::stoi(w.substr(1));
    } catch (const std::exception&) {
      fail("expected a classical bit like c3, got " + w);
    }
  }

  void expect(const std::string& token) {
    const std::string w = word();
    if (w != token) fail("expected '" + token + "', got '" + w + "'");
  }

  void done() {
    std::string extra;
    if (in >> extra) fail("trailing token '" + extra + "'");
  }
};

Apply1Q parse_1q(LineParser& p, const std::string& mnemonic) {
  Apply1Q g;
  if (mnemonic == "H" || mnemonic == "X" || mnemonic == "Z") {
    g.gate = mnemonic == "H" ? Gate1Q::H : mnemonic == "X" ? Gate1Q::X : Gate1Q::Z;
    g.qubit = p.integer();
    return g;
  }
  if (mnemonic == "RY" || mnemonic == "RZ") {
    g.gate = mnemonic == "RY" ? Gate1Q::RY : Gate1Q::RZ;
    g.qubit = p.integer();
    g.angle = p.real();
    return g;
  }
  if (mnemonic == "G1") {
    g.gate = Gate1Q::Generic;
    g.qubit = p.integer();
    for (auto* entry : {&g.matrix.m00, &g.matrix.m01, &g.matrix.m10, &g.matrix.m11}) {
      const double re = p.real();
      const double im = p.real();
      *entry = {re, im};
    }
    return g;
  }
  p.fail("unknown gate '" + mnemonic + "'");
}

bool is_1q_mnemonic(const std::string& w) {
  return w == "H" || w == "X" || w == "Z" || w == "RY" || w == "RZ" || w == "G1";
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "QUBITS " << c.num_qubits << '\n';
  os << "CLBITS " << c.num_clbits << '\n';
  for (const GateOp& op : c.ops) {
    if (const auto* g = std::get_if<Apply1Q>(&op)) {
      append_1q(os, *g);
    } else if (const auto* cx = std::get_if<ApplyCnot>(&op)) {
      os << "CNOT " << cx->control << ' ' << cx->target;
    } else if (const auto* rot = std::get_if<ApplyControlledRotation>(&op)) {
      os << (rot->axis == RotationAxis::Y ? "CRY " : "CRZ ") << rot->control << ' ' << rot->target
         << ' ' << fmt_double(rot->angle);
    } else if (const auto* meas = std::get_if<MeasureOp>(&op)) {
      os << "M " << meas->qubit << " -> c" << meas->clbit;
      if (meas->consume) os << " consume";
    } else if (const auto* cc = std::get_if<ClassicalComputeOp>(&op)) {
      os << "CC " << fn_name(cc->fn);
      for (int in : cc->inputs) os << " c" << in;
      os << " ->";
      for (int outb : cc->outputs) os << " c" << outb;
    } else if (const auto* cnd = std::get_if<CondOp>(&op)) {
      os << "COND c" << cnd->clbit << ' ';
      append_1q(os, cnd->inner);
    }
    os << '\n';
  }
  return os.str();
}

Circuit from_text(const std::string& text) {
  Circuit c;
  bool saw_qubits = false;
  bool saw_clbits = false;

  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    LineParser p(line, line_no);
    const std::string head = p.word();

    if (head == "QUBITS") {
      c.num_qubits = p.integer();
      saw_qubits = true;
    } else if (head == "CLBITS") {
      c.num_clbits = p.integer();
      saw_clbits = true;
    } else if (is_1q_mnemonic(head)) {
      c.ops.emplace_back(parse_1q(p, head));
    } else if (head == "CNOT") {
      ApplyCnot cx;
      cx.control = p.integer();
      cx.target = p.integer();
      c.ops.emplace_back(cx);
    } else if (head == "CRY" || head == "CRZ") {
      ApplyControlledRotation rot;
      rot.axis = head == "CRY" ? RotationAxis::Y : RotationAxis::Z;
      rot.control = p.integer();
      rot.target = p.integer();
      rot.angle = p.real();
      c.ops.emplace_back(rot);
    } else if (head == "M") {
      MeasureOp meas;
      meas.qubit = p.integer();
      p.expect("->");
      meas.clbit = p.clbit();
      std::string tail;
      if (p.try_word(tail)) {
        if (tail != "consume") p.fail("expected 'consume', got '" + tail + "'");
        meas.consume = true;
      }
      c.ops.emplace_back(meas);
    } else if (head == "CC") {
      ClassicalComputeOp cc;
      cc.fn = fn_from_name(p.word());
      std::string w;
      bool arrow = false;
      while (p.try_word(w)) {
        if (w == "->") {
          arrow = true;
          break;
        }
        if (w.size() < 2 || w[0] != 'c') p.fail("expected a classical bit, got " + w);
        cc.inputs.push_back(std::stoi(w.substr(1)));
      }
      if (!arrow) p.fail("missing '->'");
      while (p.try_word(w)) {
        if (w.size() < 2 || w[0] != 'c') p.fail("expected a classical bit, got " + w);
        cc.outputs.push_back(std::stoi(w.substr(1)));
      }
      if (cc.outputs.empty()) p.fail("missing output bits");
      c.ops.emplace_back(cc);
      continue;
    } else if (head == "COND") {
      CondOp cnd;
      cnd.clbit = p.clbit();
      cnd.inner = parse_1q(p, p.word());
      c.ops.emplace_back(cnd);
    } else {
      p.fail("unknown directive '" + head + "'");
    }
    p.done();
  }

  if (!saw_qubits || !saw_clbits) {
    throw std::invalid_argument("missing QUBITS or CLBITS header");
  }
  validate(c);
  return c;
}

}  // namespace stateprep
