// Wire documents, exactly as the service emits them.
export {};
