#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsgss/wire.hpp"

namespace fsgss {

struct Envelope {
  std::string from;
  std::string to;
  WireMessage message;
};

// In-process message bus. Every message is encoded on Send and decoded on
// Receive, so all traffic crosses the wire format. Interceptors run in
// registration order on each sent envelope and may rewrite or drop it.
class MessageBus {
 public:
  using Interceptor = std::function<std::optional<Envelope>(Envelope)>;

  void AddInterceptor(Interceptor hook);
  void ClearInterceptors() { interceptors_.clear(); }

  void Send(Envelope envelope);
  // Next message queued for `party`, if any.
  std::optional<Envelope> Receive(const std::string& party);
  // Throws ProtocolError when nothing is queued for `party`.
  Envelope ReceiveOrThrow(const std::string& party);

  // Encoded bytes of every delivered message, prefixed by "from->to\n".
  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  struct Queued {
    std::string from;
    std::string bytes;
  };

  std::vector<Interceptor> interceptors_;
  std::map<std::string, std::deque<Queued>> queues_;
  std::vector<std::string> transcript_;
};

}  // namespace fsgss
