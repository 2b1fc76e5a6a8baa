#include "fsgss/wire.hpp"

#include <array>
#include <string>

#include "fsgss/errors.hpp"
#include "kv_lines.hpp"

namespace fsgss {
namespace {

constexpr std::array<std::string_view, 0> kReqFields = {};
constexpr std::array<std::string_view, 1> kR1Fields = {"r1"};
constexpr std::array<std::string_view, 1> kR2Fields = {"r2"};
constexpr std::array<std::string_view, 2> kAsFields = {"a", "s"};
constexpr std::array<std::string_view, 7> kSigFields = {"m", "c", "e_cap", "r4", "r6", "s1", "s2"};

void ExpectType(const WireMessage& message, MessageType expected) {
  if (message.type != expected) {
    throw ProtocolError("expected " + std::string(ToString(expected)) + " message, got " +
                        std::string(ToString(message.type)));
  }
}

}  // namespace

std::string_view ToString(MessageType type) {
  switch (type) {
    case MessageType::kReq:
      return "REQ";
    case MessageType::kR1:
      return "R1";
    case MessageType::kR2:
      return "R2";
    case MessageType::kAs:
      return "AS";
    case MessageType::kSig:
      return "SIG";
  }
  return "?";
}

std::optional<MessageType> ParseMessageType(std::string_view tag) {
  for (MessageType type : {MessageType::kReq, MessageType::kR1, MessageType::kR2, MessageType::kAs,
                           MessageType::kSig}) {
    if (ToString(type) == tag) {
      return type;
    }
  }
  return std::nullopt;
}

std::span<const std::string_view> FieldOrder(MessageType type) {
  switch (type) {
    case MessageType::kReq:
      return kReqFields;
    case MessageType::kR1:
      return kR1Fields;
    case MessageType::kR2:
      return kR2Fields;
    case MessageType::kAs:
      return kAsFields;
    case MessageType::kSig:
      return kSigFields;
  }
  return {};
}

const BigUint& WireMessage::Get(std::string_view name) const {
  const auto order = FieldOrder(type);
  for (std::size_t i = 0; i < order.size() && i < fields.size(); ++i) {
    if (order[i] == name) {
      return fields[i];
    }
  }
  throw DomainError("message " + std::string(ToString(type)) + " has no field '" + std::string(name) + "'");
}

std::string Encode(const WireMessage& message) {
  const auto order = FieldOrder(message.type);
  if (order.size() != message.fields.size()) {
    throw DomainError("wrong field count for " + std::string(ToString(message.type)));
  }
  std::string out = "type=";
  out += ToString(message.type);
  out += '\n';
  for (std::size_t i = 0; i < order.size(); ++i) {
    out += order[i];
    out += '=';
    out += message.fields[i].ToHex();
    out += '\n';
  }
  return out;
}

WireMessage Decode(std::string_view bytes) {
  const auto lines = detail::SplitKeyValueLines(bytes);
  if (lines.empty() || lines.front().key != "type") {
    throw ParseError("message must start with type=<TAG>", 1);
  }
  const auto type = ParseMessageType(lines.front().value);
  if (!type) {
    throw ParseError("unknown message type '" + std::string(lines.front().value) + "'", 1);
  }
  const auto order = FieldOrder(*type);
  if (lines.size() - 1 < order.size()) {
    throw ParseError("missing field '" + std::string(order[lines.size() - 1]) + "'", lines.size());
  }
  if (lines.size() - 1 > order.size()) {
    throw ParseError("unexpected extra field", lines[order.size() + 1].line_number);
  }
  WireMessage message{*type, {}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    message.fields.push_back(detail::ExpectHexField(lines[i + 1], order[i]));
  }
  return message;
}

WireMessage ToWire(const EnrollRequest&) { return {MessageType::kReq, {}}; }
WireMessage ToWire(const R1Message& message) { return {MessageType::kR1, {message.r1}}; }
WireMessage ToWire(const R2Message& message) { return {MessageType::kR2, {message.r2}}; }
WireMessage ToWire(const IssueMessage& message) { return {MessageType::kAs, {message.a, message.s}}; }
WireMessage ToWire(const Signature& sig) {
  return {MessageType::kSig, {sig.m, sig.c, sig.e_cap, sig.r4, sig.r6, sig.s1, sig.s2}};
}

R1Message R1FromWire(const WireMessage& message) {
  ExpectType(message, MessageType::kR1);
  return {message.fields.at(0)};
}

R2Message R2FromWire(const WireMessage& message) {
  ExpectType(message, MessageType::kR2);
  return {message.fields.at(0)};
}

IssueMessage IssueFromWire(const WireMessage& message) {
  ExpectType(message, MessageType::kAs);
  return {message.fields.at(0), message.fields.at(1)};
}

Signature SignatureFromWire(const WireMessage& message) {
  ExpectType(message, MessageType::kSig);
  const auto& f = message.fields;
  return {f.at(0), f.at(1), f.at(2), f.at(3), f.at(4), f.at(5), f.at(6)};
}

}  // namespace fsgss
