#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsgss/bigint.hpp"
#include "fsgss/handshake.hpp"
#include "fsgss/signing.hpp"

namespace fsgss {

enum class MessageType { kReq, kR1, kR2, kAs, kSig };

std::string_view ToString(MessageType type);
std::optional<MessageType> ParseMessageType(std::string_view tag);

// Field names of each message type, in wire order.
std::span<const std::string_view> FieldOrder(MessageType type);

// Text encoding:
//   type=<TAG>\n
//   <name>=<canonical hex>\n   one line per field, in FieldOrder
struct WireMessage {
  MessageType type = MessageType::kReq;
  std::vector<BigUint> fields;  // parallel to FieldOrder(type)

  // Throws DomainError for a name not in FieldOrder(type).
  const BigUint& Get(std::string_view name) const;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

// Throws DomainError when the field count does not match the type.
std::string Encode(const WireMessage& message);
// Throws ParseError on an unknown tag, bad or non-minimal hex, missing, extra or
// reordered fields, or a missing final newline.
WireMessage Decode(std::string_view bytes);

WireMessage ToWire(const EnrollRequest& message);
WireMessage ToWire(const R1Message& message);
WireMessage ToWire(const R2Message& message);
WireMessage ToWire(const IssueMessage& message);
WireMessage ToWire(const Signature& sig);

// Each throws ProtocolError when the type tag differs.
R1Message R1FromWire(const WireMessage& message);
R2Message R2FromWire(const WireMessage& message);
IssueMessage IssueFromWire(const WireMessage& message);
Signature SignatureFromWire(const WireMessage& message);

}  // namespace fsgss
