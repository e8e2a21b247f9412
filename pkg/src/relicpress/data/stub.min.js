(async()=>{let h="# APOLLO 11 LUNAR MODULE CODE\n\n",k,t;for(k in S)h+="# --- "+k+" ---\n"+S[k]+"\n\n";h+="# Decompressed core:\n";try{t=await new Response(new Blob([Uint8Array.from(atob(B),c=>c.charCodeAt(0))]).stream().pipeThrough(new DecompressionStream("deflate-raw"))).text();h+=t.replace(/~([^])|[^~\s]/g,(m,e)=>e==null?D[m]||m:e)}catch(e){h+="[core unavailable]"}o.textContent=h})()