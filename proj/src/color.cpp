namespace tc {}
